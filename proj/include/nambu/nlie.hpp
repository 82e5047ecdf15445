#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nambu/cochain.hpp"
#include "nambu/lie.hpp"
#include "nambu/report.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

// n-ary bracket by structure constants [T_{b_1},..,T_{b_n}] = K^a_{b..} T_a,
// with K totally antisymmetric in the n lower indices. Optionally carries its
// provenance (the inducing Lie algebra and cochain).
class NLieAlgebra {
   public:
    NLieAlgebra(std::size_t arity, Tensor k);

    // n-ary quantum Nambu bracket induced by a degree-(n-2) cochain:
    //   [x_1..x_n] = sum_{i<j} (-1)^{i+j+1} w(x_1..^i..^j..x_n) [x_i, x_j].
    // For n = 3 the constants are cross-checked against the closed form
    // K^d_{abc} = w_a f^d_{bc} + w_b f^d_{ca} + w_c f^d_{ab}.
    static NLieAlgebra induce(std::shared_ptr<const LieAlgebra> parent,
                              const Cochain& omega, std::size_t arity);

    // Levi-Civita bracket on dimension n+1: K^a_{b_1..b_n} = eps_{b_1..b_n a}.
    static NLieAlgebra cross_product(std::size_t arity);

    std::size_t dim() const { return k_.dims()[0]; }
    std::size_t arity() const { return arity_; }
    const Tensor& constants() const { return k_; }
    const std::shared_ptr<const LieAlgebra>& parent() const { return parent_; }

    // Multilinear contraction of n coefficient vectors against K.
    std::vector<Rational> nbracket(std::span<const std::vector<Rational>> args) const;

    // Exhaustive Filippov-Jacobi check. Enumerates strictly increasing
    // (n-1)- and n-index combinations (total antisymmetry plus
    // multilinearity make the remaining tuples redundant); reports each
    // violating tuple (x_1..x_{n-1}, y_1..y_n) with its residual vector.
    CheckReport check_filippov() const;

    // <[a,b,c],d> + <c,[a,b,d]> = 0 over all basis 4-tuples (arity 3 only).
    CheckReport check_metric(const BilinearForm& form) const;

   private:
    std::size_t arity_;
    Tensor k_;  // rank arity+1, indexed (a, b_1, .., b_n)
    std::shared_ptr<const LieAlgebra> parent_;
    std::optional<Cochain> omega_;
};

// Theorem-level biconditional at one instance: the omega condition and the
// Filippov check on the induced algebra must agree (both pass or both fail).
struct Theorem1Report {
    CheckReport omega_condition;
    CheckReport filippov;
    bool agree = false;
};

Theorem1Report check_theorem1(std::shared_ptr<const LieAlgebra> parent,
                              const Cochain& omega, std::size_t arity);

}  // namespace nambu
