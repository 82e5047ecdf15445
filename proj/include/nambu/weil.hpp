#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nambu/cochain.hpp"
#include "nambu/dga.hpp"
#include "nambu/lie.hpp"
#include "nambu/report.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

// Weil algebra of a Lie algebra: free graded-commutative algebra on
// connection generators A^a of degree 1 and curvature generators F^a of
// degree 2 (total-parity sign rule), with
//   dA^a = F^a - 1/2 f^a_{bc} A^b A^c,   dF^a = f^a_{bc} F^b A^c.
// d is nilpotent exactly when the structure constants satisfy Jacobi.
class WeilAlgebra {
   public:
    explicit WeilAlgebra(std::shared_ptr<const LieAlgebra> parent);

    const std::shared_ptr<const LieAlgebra>& parent() const { return parent_; }
    const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
    const Differential& d() const { return *d_; }

    std::size_t id_A(std::size_t a) const;
    std::size_t id_F(std::size_t a) const;
    GradedElement A(std::size_t a) const;
    GradedElement F(std::size_t a) const;

   private:
    std::shared_ptr<const LieAlgebra> parent_;
    std::shared_ptr<const GeneratorSet> gens_;
    std::unique_ptr<Differential> d_;
};

// One displayed differential formula, kept as a syntax tree so it can be
// degree-checked and index-repaired BEFORE canonicalization (a stated image
// may cancel to zero in canonical form while still being degree-wrong).
// A term is coeff * tensor(labels) * factor sequence; each factor is a
// component family with a one-letter index label, '?' marking a missing one.
struct FormulaFactor {
    std::string family;  // A, F, chi, phi, psi, Phi, Xi, Omega
    char label = '?';
};

struct FormulaTerm {
    Rational coeff;
    std::string tensor;              // "", "f" (3 labels) or "K" (4 labels)
    std::vector<char> tensor_labels; // first label is the free upper index
    std::vector<FormulaFactor> factors;
};

struct Formula {
    std::string lhs_family;  // family whose differential this states
    std::vector<FormulaTerm> terms;

    std::string render() const;
    bool evaluable() const;  // no '?' labels, all labels bound by the tensor
};

// Verdict for one displayed formula audited against the derived ground truth.
struct AuditEntry {
    std::string list;     // which displayed list the formula comes from
    std::string name;     // e.g. "d(phi^a)"
    std::string stated;   // the formula as displayed
    std::string verdict;  // MATCH / INDEX-TYPO / MISMATCH
    std::string repair;   // single-index substitution used, when INDEX-TYPO
    std::vector<std::string> residuals;  // per free index, when MISMATCH
    bool degree_consistent = true;
    std::string degree_note;
};

struct AuditReport {
    std::vector<std::string> notes;
    std::vector<AuditEntry> entries;
    CheckReport stated_nilpotent;  // d^2 of the differential as displayed
    bool has_mismatch() const;
};

// Extension of the Weil algebra by a degree-1 cochain w with f^a_{bc} w_a = 0.
// All composite elements live inside W(g):
//   chi = w_a A^a, phi = w_a F^a,
//   chi^a = chi A^a, phi^a = phi A^a, psi^a = chi F^a, Omega^a = phi F^a,
//   Xi^a = phi^a + psi^a, Phi^a = phi^a - psi^a,
// and the ternary structure constants K^a_{bcd} are the induced ones.
class ExtendedWeilAlgebra {
   public:
    // Throws ConfigError when the constraint f^a_{bc} w_a = 0 fails.
    ExtendedWeilAlgebra(std::shared_ptr<const LieAlgebra> parent, Cochain omega);

    // Constraint residuals f^a_{bc} w_a per (b,c) plus the d(chi) - phi
    // residual, computed without requiring the constraint to hold.
    static CheckReport diagnose_constraint(std::shared_ptr<const LieAlgebra> parent,
                                           const Cochain& omega);

    const WeilAlgebra& weil() const { return weil_; }
    const Cochain& omega() const { return omega_; }
    const Tensor& K() const { return k_; }

    GradedElement chi() const;
    GradedElement phi() const;
    // family in {A, F, chi, phi, psi, Phi, Xi, Omega}; indexed composites.
    GradedElement element(const std::string& family, std::size_t index) const;

    // d(composite) by Leibniz inside W(g) -- the audit's ground truth.
    GradedElement derive_formula(const std::string& family, std::size_t index) const;

    // d(chi) = phi and d(phi) = 0.
    CheckReport check_closed_elements() const;

    // Audits every displayed differential formula of the extension against
    // the derived ground truth; single-index repairs only, never silent.
    AuditReport audit_paper_formulas() const;

    // Componentwise expansion of the bracketed (tensor-product) forms of the
    // six defining formulas against their component versions.
    CheckReport tensor_form_check() const;

    // Evaluates a formula AST at free index value a inside W(g).
    GradedElement evaluate_formula(const Formula& formula, std::size_t a) const;

   private:
    WeilAlgebra weil_;
    Cochain omega_;
    Tensor k_;
};

}  // namespace nambu
