#include "nambu/cochain.hpp"

#include <algorithm>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

// Sorts indices ascending, tracking the permutation sign; false if repeated.
bool sort_with_sign(std::vector<std::size_t>& idx, int& sign) {
    sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j] < idx[j - 1]) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return false;
    return true;
}

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

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

Cochain::Cochain(std::shared_ptr<const LieAlgebra> parent, std::size_t degree)
    : parent_(std::move(parent)), degree_(degree) {
    if (!parent_) throw ConfigError("cochain needs a parent algebra");
}

Cochain Cochain::dual_basis(std::shared_ptr<const LieAlgebra> parent,
                            std::size_t index) {
    Cochain w(std::move(parent), 1);
    if (index >= w.parent_->dim()) throw BoundsError("dual_basis: index out of range");
    w.add_term({index}, Rational(1));
    return w;
}

Cochain Cochain::trace(std::shared_ptr<const LieAlgebra> parent) {
    if (!parent || !parent->has_matrix_realization())
        throw UnsupportedError("trace cochain needs a matrix realization");
    Cochain w(parent, 1);
    const auto& ms = parent->basis_matrices();
    for (std::size_t a = 0; a < ms.size(); ++a) {
        Rational tr(0);
        for (std::size_t i = 0; i < ms[a].dims()[0]; ++i) tr += ms[a].at({i, i});
        if (tr != 0) w.add_term({a}, tr);
    }
    return w;
}

void Cochain::add_term(std::vector<std::size_t> indices, const Rational& coeff) {
    if (indices.size() != degree_)
        throw ShapeError("cochain term arity mismatch");
    for (std::size_t i : indices)
        if (i >= parent_->dim()) throw BoundsError("cochain index out of range");
    int sign = 1;
    if (!sort_with_sign(indices, sign)) return;  // repeated index: zero by antisymmetry
    Rational& slot = coeffs_[indices];
    slot += Rational(sign) * coeff;
    if (slot == 0) coeffs_.erase(indices);
}

Rational Cochain::coeff(std::span<const std::size_t> indices) const {
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    int sign = 1;
    if (!sort_with_sign(idx, sign)) return Rational(0);
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return Rational(0);
    return Rational(sign) * it->second;
}

Rational Cochain::evaluate(std::span<const std::vector<Rational>> args) const {
    if (args.size() != degree_) throw ShapeError("evaluate: arity mismatch");
    for (const auto& v : args)
        if (v.size() != parent_->dim()) throw ShapeError("evaluate: vector length mismatch");
    Rational total(0);
    std::vector<std::size_t> perm(degree_);
    for (const auto& [tuple, c] : coeffs_) {
        // det of the matrix (args[s])^{tuple[r]} by permutation expansion
        for (std::size_t i = 0; i < degree_; ++i) perm[i] = i;
        Rational det(0);
        do {
            int s = 1;
            for (std::size_t i = 0; i < degree_; ++i)
                for (std::size_t j = i + 1; j < degree_; ++j)
                    if (perm[i] > perm[j]) s = -s;
            Rational prod(s);
            for (std::size_t r = 0; r < degree_ && prod != 0; ++r)
                prod *= args[perm[r]][tuple[r]];
            det += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += c * det;
    }
    return total;
}

Cochain Cochain::wedge(const Cochain& other) const {
    if (parent_ != other.parent_ && !(parent_->dim() == other.parent_->dim() &&
                                      parent_->f() == other.parent_->f()))
        throw ConfigError("wedge: parent algebras differ");
    Cochain out(parent_, degree_ + other.degree_);
    if (out.degree_ > parent_->dim()) return out;  // identically zero
    for (const auto& [s, cu] : coeffs_)
        for (const auto& [t, cv] : other.coeffs_) {
            std::vector<std::size_t> merged(s);
            merged.insert(merged.end(), t.begin(), t.end());
            out.add_term(std::move(merged), cu * cv);
        }
    return out;
}

Cochain Cochain::coboundary() const {
    const std::size_t n = parent_->dim();
    const std::size_t k1 = degree_ + 1;
    Cochain out(parent_, k1);
    if (is_zero() || k1 > n) return out;
    auto tuple = first_combination(k1);
    do {
        Rational val(0);
        std::vector<std::size_t> rest(k1 - 1);
        for (std::size_t i = 0; i < k1; ++i)
            for (std::size_t j = i + 1; j < k1; ++j) {
                rest.clear();
                rest.push_back(0);  // slot for the bracket index
                for (std::size_t m = 0; m < k1; ++m)
                    if (m != i && m != j) rest.push_back(tuple[m]);
                const int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
                for (std::size_t a = 0; a < n; ++a) {
                    const Rational fv = parent_->f(a, tuple[i], tuple[j]);
                    if (fv == 0) continue;
                    rest[0] = a;
                    const Rational wv = coeff(rest);
                    if (wv != 0) val += Rational(sign) * fv * wv;
                }
            }
        if (val != 0) out.add_term(std::vector<std::size_t>(tuple), val);
    } while (next_combination(tuple, n));
    return out;
}

CheckReport Cochain::check_omega_condition() const {
    CheckReport report{.check = "omega_wedge_delta_omega", .notes = {}, .violations = {}};
    const Cochain c = wedge(coboundary());
    for (const auto& [tuple, v] : c.coeffs())
        report.violations.push_back(Violation{tuple, rational_str(v)});
    return report;
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (degree_ != other.degree_) throw ShapeError("cochain sum: degree mismatch");
    Cochain out = *this;
    for (const auto& [t, c] : other.coeffs_) out.add_term(std::vector<std::size_t>(t), c);
    return out;
}

Cochain Cochain::operator*(const Rational& scalar) const {
    Cochain out(parent_, degree_);
    if (scalar == 0) return out;
    for (const auto& [t, c] : coeffs_) out.coeffs_[t] = c * scalar;
    return out;
}

bool Cochain::operator==(const Cochain& other) const {
    return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

}  // namespace nambu
