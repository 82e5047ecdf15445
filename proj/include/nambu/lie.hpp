#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nambu/rational.hpp"
#include "nambu/report.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

// Symmetric bilinear form on basis vectors, <T_a, T_b> = g_{ab}.
struct BilinearForm {
    Tensor g;
    bool nondegenerate = false;
};

// Finite-dimensional Lie algebra given by structure constants
// [T_b, T_c] = f^a_{bc} T_a, stored as a rank-3 tensor indexed (a, b, c).
// Antisymmetry in (b, c) is enforced at construction; the Jacobi identity is
// NOT assumed (check_jacobi reports on it), so non-examples can be studied.
class LieAlgebra {
   public:
    LieAlgebra(std::vector<std::string> basis_labels, Tensor f);

    // name in {gl, sl, heisenberg, abelian, affine1}; gl(n) basis is the
    // matrix units E_ij in row-major order. Throws ConfigError on unknown
    // name or invalid size.
    static std::shared_ptr<const LieAlgebra> builtin(const std::string& name,
                                                     std::size_t size);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Tensor& f() const { return f_; }
    Rational f(std::size_t a, std::size_t b, std::size_t c) const {
        return f_.at({a, b, c});
    }
    std::size_t label_index(const std::string& label) const;

    // z^a = f^a_{bc} x^b y^c. Throws ShapeError on length mismatch.
    std::vector<Rational> bracket(std::span<const Rational> x,
                                  std::span<const Rational> y) const;

    // Exhaustive check of f^d_{bc} f^k_{ad} + f^d_{ca} f^k_{bd} +
    // f^d_{ab} f^k_{cd} = 0 over all (a,b,c,k); every violating tuple is
    // listed with its residual.
    CheckReport check_jacobi() const;

    bool has_matrix_realization() const { return !matrices_.empty(); }
    const std::vector<Tensor>& basis_matrices() const { return matrices_; }

    // g_{ab} = Tr(M_a M_b). Throws UnsupportedError without matrices.
    BilinearForm trace_form() const;

    // Structure constants in the basis T'_a = P^b_a T_b (columns of p are the
    // new basis vectors). Drops any matrix realization. Throws ConfigError if
    // p is singular.
    std::shared_ptr<const LieAlgebra> change_basis(const Tensor& p) const;

   private:
    std::vector<std::string> labels_;
    Tensor f_;
    std::vector<Tensor> matrices_;  // empty unless matrix-realized (gl family)
};

// Gauss-Jordan inverse of a square rational matrix; nullopt if singular.
std::optional<Tensor> invert_matrix(const Tensor& m);

}  // namespace nambu
