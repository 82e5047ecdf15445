#include "nambu/nlie.hpp"

#include <algorithm>
#include <string>

#include "nambu/errors.hpp"
#include "nambu/parallel.hpp"

namespace nambu {

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> all_combinations(std::size_t k, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

// Sign of the tuple as a permutation of 0..len-1; 0 if not a permutation.
int levi_civita(std::span<const std::size_t> tuple) {
    std::vector<std::size_t> t(tuple.begin(), tuple.end());
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        while (t[i] != i) {
            if (t[i] >= t.size() || t[t[i]] == t[i]) return 0;
            std::swap(t[i], t[t[i]]);
            sign = -sign;
        }
    }
    return sign;
}

std::string residual_str(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rational_str(v[i]);
    }
    return s + ")";
}

}  // namespace

NLieAlgebra::NLieAlgebra(std::size_t arity, Tensor k) : arity_(arity), k_(std::move(k)) {
    if (arity_ < 2) throw ConfigError("n-Lie arity must be >= 2");
    if (k_.rank() != arity_ + 1) throw ShapeError("K tensor rank must be arity + 1");
    for (std::size_t d : k_.dims())
        if (d != k_.dims()[0]) throw ShapeError("K tensor axes must have equal extents");
    std::vector<std::size_t> lower(arity_);
    for (std::size_t i = 0; i < arity_; ++i) lower[i] = i + 1;
    if (!(k_.antisymmetrized(lower) == k_))
        throw ConfigError("K tensor is not totally antisymmetric in its lower indices");
}

NLieAlgebra NLieAlgebra::induce(std::shared_ptr<const LieAlgebra> parent,
                                const Cochain& omega, std::size_t arity) {
    if (arity < 2) throw ConfigError("induce: arity must be >= 2");
    if (omega.degree() != arity - 2)
        throw ConfigError("induce: cochain degree must be arity - 2");
    const std::size_t n = parent->dim();
    Tensor k(std::vector<std::size_t>(arity + 1, n));

    std::vector<std::size_t> lower(arity, 0), rest(arity - 2), kidx(arity + 1);
    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i < arity; ++i)
            for (std::size_t j = i + 1; j < arity; ++j) {
                rest.clear();
                for (std::size_t m = 0; m < arity; ++m)
                    if (m != i && m != j) rest.push_back(lower[m]);
                const Rational wv = omega.coeff(rest);
                if (wv == 0) continue;
                const int sign = ((i + j) % 2 == 1) ? 1 : -1;  // (-1)^{i+j+1}, 1-based
                for (std::size_t a = 0; a < n; ++a) {
                    const Rational fv = parent->f(a, lower[i], lower[j]);
                    if (fv == 0) continue;
                    kidx[0] = a;
                    std::copy(lower.begin(), lower.end(), kidx.begin() + 1);
                    k.at(kidx) += Rational(sign) * wv * fv;
                }
            }
        // advance odometer
        done = true;
        for (std::size_t i = arity; i-- > 0;) {
            if (++lower[i] < n) {
                done = false;
                break;
            }
            lower[i] = 0;
        }
    }

    if (arity == 3) {
        // independent closed form, compared entrywise
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) {
                        const Rational direct = omega.coeff(std::vector<std::size_t>{a}) *
                                                    parent->f(d, b, c) +
                                                omega.coeff(std::vector<std::size_t>{b}) *
                                                    parent->f(d, c, a) +
                                                omega.coeff(std::vector<std::size_t>{c}) *
                                                    parent->f(d, a, b);
                        if (direct != k.at({d, a, b, c}))
                            throw ConfigError("induce: ternary closed form disagrees");
                    }
    }

    NLieAlgebra out(arity, std::move(k));
    out.parent_ = std::move(parent);
    out.omega_ = omega;
    return out;
}

NLieAlgebra NLieAlgebra::cross_product(std::size_t arity) {
    if (arity < 2) throw ConfigError("cross_product: arity must be >= 2");
    const std::size_t n = arity + 1;
    Tensor k(std::vector<std::size_t>(arity + 1, n));
    std::vector<std::size_t> idx(arity + 1, 0), eps(arity + 1);
    bool done = false;
    while (!done) {
        // idx = (a, b_1..b_n); eps order is (b_1..b_n, a)
        std::copy(idx.begin() + 1, idx.end(), eps.begin());
        eps[arity] = idx[0];
        const int s = levi_civita(eps);
        if (s != 0) k.at(idx) = s;
        done = true;
        for (std::size_t i = arity + 1; i-- > 0;) {
            if (++idx[i] < n) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }
    return NLieAlgebra(arity, std::move(k));
}

std::vector<Rational> NLieAlgebra::nbracket(
    std::span<const std::vector<Rational>> args) const {
    const std::size_t n = dim();
    if (args.size() != arity_) throw ShapeError("nbracket: arity mismatch");
    for (const auto& v : args)
        if (v.size() != n) throw ShapeError("nbracket: vector length mismatch");
    std::vector<Rational> out(n, Rational(0));
    std::vector<std::size_t> idx(arity_ + 1, 0);
    bool done = false;
    while (!done) {
        Rational prod(1);
        for (std::size_t i = 0; i < arity_ && prod != 0; ++i) prod *= args[i][idx[i + 1]];
        if (prod != 0) {
            for (std::size_t a = 0; a < n; ++a) {
                idx[0] = a;
                const Rational& kv = k_.at(idx);
                if (kv != 0) out[a] += kv * prod;
            }
        }
        idx[0] = 0;
        done = true;
        for (std::size_t i = arity_ + 1; i-- > 1;) {
            if (++idx[i] < n) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }
    return out;
}

CheckReport NLieAlgebra::check_filippov() const {
    const std::size_t n = dim();
    CheckReport report{.check = "filippov", .notes = {}, .violations = {}};
    report.notes.push_back(
        "enumeration over strictly increasing index combinations; remaining tuples "
        "follow by multilinearity and total antisymmetry");
    const auto xs = all_combinations(arity_ - 1, n);
    const auto ys = all_combinations(arity_, n);
    if (xs.empty() || ys.empty()) return report;

    std::vector<std::vector<Violation>> parts(xs.size());
    parallel_chunks(xs.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<std::size_t> kx(arity_ + 1), ky(arity_ + 1);
        for (std::size_t xi = begin; xi < end; ++xi) {
            const auto& x = xs[xi];
            for (const auto& y : ys) {
                std::vector<Rational> residual(n, Rational(0));
                bool nonzero = false;
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs(0), rhs(0);
                    for (std::size_t a = 0; a < n; ++a) {
                        // [x_1..x_{n-1}, [y_1..y_n]]
                        ky[0] = a;
                        std::copy(y.begin(), y.end(), ky.begin() + 1);
                        const Rational& inner = k_.at(ky);
                        if (inner != 0) {
                            kx[0] = l;
                            std::copy(x.begin(), x.end(), kx.begin() + 1);
                            kx[arity_] = a;
                            lhs += inner * k_.at(kx);
                        }
                        // sum_k [y_1..[x, y_k]..y_n]
                        for (std::size_t slot = 0; slot < arity_; ++slot) {
                            kx[0] = a;
                            std::copy(x.begin(), x.end(), kx.begin() + 1);
                            kx[arity_] = y[slot];
                            const Rational& inner2 = k_.at(kx);
                            if (inner2 == 0) continue;
                            ky[0] = l;
                            std::copy(y.begin(), y.end(), ky.begin() + 1);
                            ky[1 + slot] = a;
                            rhs += inner2 * k_.at(ky);
                        }
                    }
                    residual[l] = lhs - rhs;
                    if (residual[l] != 0) nonzero = true;
                }
                if (nonzero) {
                    std::vector<std::size_t> tuple(x);
                    tuple.insert(tuple.end(), y.begin(), y.end());
                    parts[xi].push_back(Violation{std::move(tuple), residual_str(residual)});
                }
            }
        }
    });
    for (auto& part : parts)
        report.violations.insert(report.violations.end(), part.begin(), part.end());
    return report;
}

CheckReport NLieAlgebra::check_metric(const BilinearForm& form) const {
    if (arity_ != 3) throw UnsupportedError("check_metric: arity 3 only");
    const std::size_t n = dim();
    if (form.g.dims() != std::vector<std::size_t>{n, n})
        throw ShapeError("check_metric: form dimension mismatch");
    CheckReport report{.check = "metric_invariance", .notes = {}, .violations = {}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    Rational res(0);
                    for (std::size_t l = 0; l < n; ++l)
                        res += k_.at({l, a, b, c}) * form.g.at({l, d}) +
                               k_.at({l, a, b, d}) * form.g.at({c, l});
                    if (res != 0)
                        report.violations.push_back(
                            Violation{{a, b, c, d}, rational_str(res)});
                }
    return report;
}

Theorem1Report check_theorem1(std::shared_ptr<const LieAlgebra> parent,
                              const Cochain& omega, std::size_t arity) {
    Theorem1Report out{.omega_condition = omega.check_omega_condition(),
                       .filippov = NLieAlgebra::induce(parent, omega, arity).check_filippov(),
                       .agree = false};
    out.agree = out.omega_condition.passed() == out.filippov.passed();
    return out;
}

}  // namespace nambu
