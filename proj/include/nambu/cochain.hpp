#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "nambu/lie.hpp"
#include "nambu/rational.hpp"
#include "nambu/report.hpp"

namespace nambu {

// Totally antisymmetric k-linear functional on a Lie algebra with trivial
// coefficients. Stored by coefficients on strictly increasing basis index
// tuples; evaluation on arbitrary tuples extends by antisymmetry (repeated
// argument gives 0), which makes equality-to-zero a coefficient check.
//
// Sign convention: this engine's coboundary satisfies
//   (delta w)(x_0..x_k) = sum_{i<j} (-1)^{i+j+1} w([x_i,x_j], ..^i..^j..),
// i.e. the textbook alternating sum with a uniform global sign flip, so that
// for degree 1 the defining relation reads (delta w)(x,y) = +w([x,y]).
class Cochain {
   public:
    Cochain(std::shared_ptr<const LieAlgebra> parent, std::size_t degree);

    static Cochain dual_basis(std::shared_ptr<const LieAlgebra> parent,
                              std::size_t index);  // T^a
    // ω = Tr coefficients; requires a matrix realization.
    static Cochain trace(std::shared_ptr<const LieAlgebra> parent);

    const std::shared_ptr<const LieAlgebra>& parent() const { return parent_; }
    std::size_t degree() const { return degree_; }

    // Coefficient assembly; indices are sorted with the permutation sign and
    // ignored if repeated.
    void add_term(std::vector<std::size_t> indices, const Rational& coeff);

    // Coefficient on an arbitrary index tuple (antisymmetric extension).
    Rational coeff(std::span<const std::size_t> indices) const;
    const std::map<std::vector<std::size_t>, Rational>& coeffs() const {
        return coeffs_;
    }
    bool is_zero() const { return coeffs_.empty(); }

    // Multilinear totally antisymmetric evaluation on degree() coefficient
    // vectors. Throws ShapeError on arity or length mismatch.
    Rational evaluate(std::span<const std::vector<Rational>> args) const;

    // Shuffle-normalized wedge product (no 1/k! factors); degrees add.
    // Throws ConfigError if the parents differ.
    Cochain wedge(const Cochain& other) const;

    // Chevalley-Eilenberg coboundary in the convention above.
    Cochain coboundary() const;

    // Reports every basis tuple where (w ∧ delta w) is nonzero; empty means
    // the induced n-ary bracket condition holds.
    CheckReport check_omega_condition() const;

    Cochain operator+(const Cochain& other) const;
    Cochain operator*(const Rational& scalar) const;
    bool operator==(const Cochain& other) const;

   private:
    std::shared_ptr<const LieAlgebra> parent_;
    std::size_t degree_;
    std::map<std::vector<std::size_t>, Rational> coeffs_;  // increasing tuples, nonzero
};

}  // namespace nambu
