#include "nambu/lie.hpp"

#include <algorithm>

#include "nambu/errors.hpp"
#include "nambu/parallel.hpp"

namespace nambu {

namespace {

Tensor antisym_check(Tensor f, std::size_t dim) {
    if (f.rank() != 3 || f.dims() != std::vector<std::size_t>{dim, dim, dim})
        throw ShapeError("structure constants must be a rank-3 tensor over dim");
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = b; c < dim; ++c)
                if (f.at({a, b, c}) != -f.at({a, c, b}))
                    throw ConfigError("structure constants not antisymmetric at (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
    return f;
}

// [E_ij, E_kl] from E_ij E_kl = delta_jk E_il, basis row-major.
Tensor gl_constants(std::size_t n) {
    const std::size_t dim = n * n;
    Tensor f({dim, dim, dim});
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const std::size_t b = idx(i, j), c = idx(k, l);
                    if (j == k) f.at({idx(i, l), b, c}) += 1;
                    if (l == i) f.at({idx(k, j), b, c}) -= 1;
                }
    return f;
}

std::vector<Tensor> gl_matrices(std::size_t n) {
    std::vector<Tensor> ms;
    ms.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor m({n, n});
            m.at({i, j}) = 1;
            ms.push_back(std::move(m));
        }
    return ms;
}

std::vector<std::string> gl_labels(std::size_t n) {
    std::vector<std::string> ls;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            ls.push_back("E" + std::to_string(i) + std::to_string(j));
    return ls;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> basis_labels, Tensor f)
    : labels_(std::move(basis_labels)), f_(antisym_check(std::move(f), labels_.size())) {
    if (labels_.empty()) throw ConfigError("Lie algebra dimension must be positive");
}

std::size_t LieAlgebra::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ConfigError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::shared_ptr<const LieAlgebra> LieAlgebra::builtin(const std::string& name,
                                                      std::size_t size) {
    if (name == "abelian") {
        if (size == 0) throw ConfigError("abelian: size must be >= 1");
        std::vector<std::string> ls;
        for (std::size_t i = 1; i <= size; ++i) ls.push_back("T" + std::to_string(i));
        return std::make_shared<LieAlgebra>(std::move(ls), Tensor({size, size, size}));
    }
    if (name == "gl") {
        if (size == 0) throw ConfigError("gl: size must be >= 1");
        auto alg = std::make_shared<LieAlgebra>(gl_labels(size), gl_constants(size));
        alg->matrices_ = gl_matrices(size);
        return alg;
    }
    if (name == "sl") {
        if (size != 2) throw ConfigError("sl: only sl(2) is built in");
        // basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h
        Tensor f({3, 3, 3});
        f.at({1, 0, 1}) = 2;
        f.at({1, 1, 0}) = -2;
        f.at({2, 0, 2}) = -2;
        f.at({2, 2, 0}) = 2;
        f.at({0, 1, 2}) = 1;
        f.at({0, 2, 1}) = -1;
        return std::make_shared<LieAlgebra>(std::vector<std::string>{"h", "e", "f"},
                                            std::move(f));
    }
    if (name == "heisenberg") {
        if (size < 3 || size % 2 == 0)
            throw ConfigError("heisenberg: size must be odd and >= 3");
        const std::size_t k = (size - 1) / 2;
        std::vector<std::string> ls;
        for (std::size_t i = 1; i <= k; ++i)
            ls.push_back(k == 1 ? "x" : "x" + std::to_string(i));
        for (std::size_t i = 1; i <= k; ++i)
            ls.push_back(k == 1 ? "y" : "y" + std::to_string(i));
        ls.push_back("z");
        Tensor f({size, size, size});
        for (std::size_t i = 0; i < k; ++i) {
            f.at({size - 1, i, k + i}) = 1;
            f.at({size - 1, k + i, i}) = -1;
        }
        return std::make_shared<LieAlgebra>(std::move(ls), std::move(f));
    }
    if (name == "affine1") {
        if (size != 2) throw ConfigError("affine1: size must be 2");
        // [d, t] = t
        Tensor f({2, 2, 2});
        f.at({1, 0, 1}) = 1;
        f.at({1, 1, 0}) = -1;
        return std::make_shared<LieAlgebra>(std::vector<std::string>{"d", "t"},
                                            std::move(f));
    }
    throw ConfigError("unknown builtin algebra '" + name + "'");
}

std::vector<Rational> LieAlgebra::bracket(std::span<const Rational> x,
                                          std::span<const Rational> y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw ShapeError("bracket: coefficient vector length mismatch");
    std::vector<Rational> z(n, Rational(0));
    for (std::size_t b = 0; b < n; ++b) {
        if (x[b] == 0) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (y[c] == 0) continue;
            for (std::size_t a = 0; a < n; ++a) {
                const Rational& fv = f_.at({a, b, c});
                if (fv != 0) z[a] += fv * x[b] * y[c];
            }
        }
    }
    return z;
}

CheckReport LieAlgebra::check_jacobi() const {
    const std::size_t n = dim();
    CheckReport report{.check = "jacobi", .notes = {}, .violations = {}};
    std::vector<std::vector<Violation>> parts(n);
    parallel_chunks(n, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational res(0);
                        for (std::size_t d = 0; d < n; ++d)
                            res += f_.at({d, b, c}) * f_.at({k, a, d}) +
                                   f_.at({d, c, a}) * f_.at({k, b, d}) +
                                   f_.at({d, a, b}) * f_.at({k, c, d});
                        if (res != 0)
                            parts[a].push_back(Violation{{a, b, c, k}, rational_str(res)});
                    }
    });
    for (auto& part : parts)
        report.violations.insert(report.violations.end(), part.begin(), part.end());
    return report;
}

BilinearForm LieAlgebra::trace_form() const {
    if (!has_matrix_realization())
        throw UnsupportedError("trace form needs a matrix realization");
    const std::size_t n = dim();
    const std::size_t m = matrices_[0].dims()[0];
    Tensor g({n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational tr(0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    tr += matrices_[a].at({i, j}) * matrices_[b].at({j, i});
            g.at({a, b}) = tr;
        }
    const bool nondeg = invert_matrix(g).has_value();
    return BilinearForm{std::move(g), nondeg};
}

std::shared_ptr<const LieAlgebra> LieAlgebra::change_basis(const Tensor& p) const {
    const std::size_t n = dim();
    if (p.dims() != std::vector<std::size_t>{n, n})
        throw ShapeError("change_basis: matrix must be dim x dim");
    auto inv = invert_matrix(p);
    if (!inv) throw ConfigError("change_basis: matrix is singular");
    Tensor fp({n, n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Rational acc(0);
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t e = 0; e < n; ++e) {
                        if (p.at({d, b}) == 0 || p.at({e, c}) == 0) continue;
                        for (std::size_t g = 0; g < n; ++g)
                            acc += inv->at({a, g}) * f_.at({g, d, e}) * p.at({d, b}) *
                                   p.at({e, c});
                    }
                fp.at({a, b, c}) = acc;
            }
    std::vector<std::string> ls;
    for (std::size_t i = 1; i <= n; ++i) ls.push_back("S" + std::to_string(i));
    return std::make_shared<LieAlgebra>(std::move(ls), std::move(fp));
}

std::optional<Tensor> invert_matrix(const Tensor& m) {
    if (m.rank() != 2 || m.dims()[0] != m.dims()[1])
        throw ShapeError("invert_matrix: square matrix expected");
    const std::size_t n = m.dims()[0];
    // augmented [m | I]
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m.at({i, j});
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(aug[piv], aug[col]);
        const Rational inv = Rational(1) / aug[col][col];
        for (auto& v : aug[col]) v *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const Rational factor = aug[row][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[row][j] -= factor * aug[col][j];
        }
    }
    Tensor out({n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at({i, j}) = aug[i][n + j];
    return out;
}

}  // namespace nambu
