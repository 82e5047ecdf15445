#include "nambu/brs.hpp"

#include <string>

#include "nambu/errors.hpp"
#include "nambu/nlie.hpp"

namespace nambu {

BRSAlgebra::BRSAlgebra(std::shared_ptr<const LieAlgebra> parent)
    : parent_(std::move(parent)) {
    const std::size_t n = parent_->dim();
    auto gens = std::make_shared<GeneratorSet>(SignRule::TotalParity);
    for (std::size_t a = 0; a < n; ++a)
        gens->add("A" + std::to_string(a + 1), Bidegree{1, 0});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("chi" + std::to_string(a + 1), Bidegree{0, 1});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("F" + std::to_string(a + 1), Bidegree{2, 0});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("phi" + std::to_string(a + 1), Bidegree{1, 1});
    gens_ = gens;

    d_ = std::make_unique<Differential>(gens_, Bidegree{1, 0});
    delta_ = std::make_unique<Differential>(gens_, Bidegree{0, 1});
    for (std::size_t a = 0; a < n; ++a) {
        GradedElement dA = GradedElement::generator(gens_, id_F(a));
        GradedElement dF(gens_);
        GradedElement sA(gens_);
        sA.add_word({id_phi(a)}, -1);
        GradedElement sF(gens_);
        GradedElement schi(gens_);
        GradedElement sphi(gens_);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Rational fv = parent_->f(a, b, c);
                if (fv == 0) continue;
                dA.add_word({id_A(b), id_A(c)}, Rational(-1, 2) * fv);
                dF.add_word({id_F(b), id_A(c)}, fv);
                sA.add_word({id_A(b), id_chi(c)}, -fv);
                sF.add_word({id_F(b), id_chi(c)}, fv);
                schi.add_word({id_chi(b), id_chi(c)}, Rational(-1, 2) * fv);
                sphi.add_word({id_phi(b), id_chi(c)}, fv);
            }
        d_->set_image(id_A(a), std::move(dA));
        d_->set_image(id_F(a), std::move(dF));
        d_->set_image(id_chi(a), GradedElement::generator(gens_, id_phi(a)));
        // d(phi) = 0 is the default image
        delta_->set_image(id_A(a), std::move(sA));
        delta_->set_image(id_F(a), std::move(sF));
        delta_->set_image(id_chi(a), std::move(schi));
        delta_->set_image(id_phi(a), std::move(sphi));
    }
}

std::size_t BRSAlgebra::check(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("component index out of range");
    return a;
}

bool BRSRelationsReport::passed() const {
    return d_squared.passed() && delta_squared.passed() && total_squared.passed() &&
           anticommutator.passed() && d_degree.passed() && delta_degree.passed();
}

BRSRelationsReport check_brs_relations(const BRSAlgebra& b) {
    BRSRelationsReport report;
    report.d_squared = b.d().check_nilpotent();
    report.d_squared.check = "d_squared";
    report.delta_squared = b.delta().check_nilpotent();
    report.delta_squared.check = "delta_squared";
    report.total_squared = check_sum_nilpotent(b.d(), b.delta(), "total_squared");
    report.anticommutator = check_anticommute(b.d(), b.delta(), "anticommutator");
    report.d_degree = b.d().check_degree_consistency();
    report.d_degree.check = "d_degree";
    report.delta_degree = b.delta().check_degree_consistency();
    report.delta_degree.check = "delta_degree";
    return report;
}

GhostDerivation::GhostDerivation(std::shared_ptr<const LieAlgebra> parent,
                                 Cochain omega)
    : parent_(std::move(parent)),
      omega_(std::move(omega)),
      k_(NLieAlgebra::induce(parent_, omega_, 3).constants()) {
    const std::size_t n = parent_->dim();
    if (omega_.degree() != 1)
        throw ConfigError("ghost derivation cochain must have degree 1");
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            Rational res(0);
            for (std::size_t a = 0; a < n; ++a)
                res += parent_->f(a, b, c) * omega_.coeff(std::vector<std::size_t>{a});
            if (res != 0)
                throw ConfigError(
                    "ghost derivation cochain violates f^a_{bc} w_a = 0 at (b,c)=(" +
                    std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
        }

    auto gens = std::make_shared<GeneratorSet>(SignRule::Bigraded);
    for (std::size_t a = 0; a < n; ++a)
        gens->add("A" + std::to_string(a + 1), Bidegree{1, 0});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("xi" + std::to_string(a + 1), Bidegree{0, 1});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("eta" + std::to_string(a + 1), Bidegree{0, 0});
    gens_ = gens;

    auto w = [this](std::size_t a) {
        return omega_.coeff(std::vector<std::size_t>{a});
    };
    delta_ = std::make_unique<Differential>(gens_, Bidegree{0, 1});
    for (std::size_t a = 0; a < n; ++a) {
        GradedElement dxi(gens_), deta(gens_), dA(gens_);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Rational fv = parent_->f(a, b, c);
                if (fv != 0) {
                    for (std::size_t d = 0; d < n; ++d) {
                        const Rational wd = w(d);
                        if (wd == 0) continue;
                        dxi.add_word({n + n + d, n + b, n + c},
                                     Rational(-1, 2) * wd * fv);  // -1/2 Tr(eta)[xi,xi]
                        dxi.add_word({n + d, n + n + b, n + c}, wd * fv);  // Tr(xi)[eta,xi]
                        deta.add_word({n + n + d, n + n + b, n + c}, -wd * fv);
                    }
                }
                for (std::size_t d = 0; d < n; ++d) {
                    const Rational kv = k_.at({a, b, c, d});
                    if (kv != 0) dA.add_word({b, n + c, n + n + d}, -kv);
                }
            }
        delta_->set_image(n + a, std::move(dxi));
        delta_->set_image(n + n + a, std::move(deta));
        delta_->set_image(a, std::move(dA));
    }
}

GradedElement GhostDerivation::A(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("component index out of range");
    return GradedElement::generator(gens_, a);
}

GradedElement GhostDerivation::xi(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("component index out of range");
    return GradedElement::generator(gens_, parent_->dim() + a);
}

GradedElement GhostDerivation::eta(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("component index out of range");
    return GradedElement::generator(gens_, 2 * parent_->dim() + a);
}

std::pair<std::vector<GradedElement>, std::vector<GradedElement>>
GhostDerivation::derive_ghost_fields() const {
    const std::size_t n = parent_->dim();
    auto w = [this](std::size_t a) {
        return omega_.coeff(std::vector<std::size_t>{a});
    };
    GradedElement tr_xi(gens_), tr_eta(gens_), tr_A(gens_);
    for (std::size_t b = 0; b < n; ++b) {
        const Rational wb = w(b);
        if (wb == 0) continue;
        tr_xi = tr_xi + xi(b) * wb;
        tr_eta = tr_eta + eta(b) * wb;
        tr_A = tr_A + A(b) * wb;
    }
    std::vector<GradedElement> chi, phi;
    for (std::size_t a = 0; a < n; ++a) {
        chi.push_back(tr_xi * eta(a) - tr_eta * xi(a));
        GradedElement bracket(gens_);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
                const Rational fv = parent_->f(a, c, d);
                if (fv != 0) bracket = bracket + xi(c) * eta(d) * fv;
            }
        phi.push_back(tr_A * bracket);
    }
    return {std::move(chi), std::move(phi)};
}

std::vector<GradedElement> GhostDerivation::triple_bracket(
    const std::vector<GradedElement>& x, const std::vector<GradedElement>& y,
    const std::vector<GradedElement>& z) const {
    const std::size_t n = parent_->dim();
    if (x.size() != n || y.size() != n || z.size() != n)
        throw ShapeError("triple_bracket: family size mismatch");
    std::vector<GradedElement> out;
    for (std::size_t a = 0; a < n; ++a) {
        GradedElement e(gens_);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Rational kv = k_.at({a, b, c, d});
                    if (kv != 0) e = e + x[b] * y[c] * z[d] * kv;
                }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<GradedElement> GhostDerivation::triple_gauge(
    const std::vector<GradedElement>& x, const std::vector<GradedElement>& y) const {
    std::vector<GradedElement> a_family;
    for (std::size_t a = 0; a < parent_->dim(); ++a) a_family.push_back(A(a));
    return triple_bracket(x, y, a_family);
}

AuditReport GhostDerivation::check_ghost_transformations() const {
    const std::size_t n = parent_->dim();
    AuditReport report;
    report.notes.push_back(
        "ghost field chi^a = (w_b xi^b) eta^a - (w_b eta^b) xi^a and auxiliary "
        "field phi^a = (w_b A^b) f^a_{cd} xi^c eta^d are derived, not postulated; "
        "a stray trailing \", A\" in the displayed chi definition is dropped as "
        "the only reading with bidegree (0,1)");
    report.notes.push_back(
        "the unit scalar multiplying the gauge transformation is taken as 1; the "
        "sign rule on this sector is bigraded, so xi components commute with A "
        "components");
    report.notes.push_back(
        "a differential of F is never defined in this two-parameter sector and is "
        "not implemented here");

    auto [chi, phi] = derive_ghost_fields();
    auto bin = [&](const std::vector<GradedElement>& x,
                   const std::vector<GradedElement>& y, std::size_t a) {
        GradedElement e(gens_);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Rational fv = parent_->f(a, b, c);
                if (fv != 0) e = e + x[b] * y[c] * fv;
            }
        return e;
    };
    std::vector<GradedElement> a_family;
    for (std::size_t a = 0; a < n; ++a) a_family.push_back(A(a));

    struct Claim {
        std::string name;
        std::function<GradedElement(std::size_t)> lhs;
        std::function<GradedElement(std::size_t)> rhs;
    };
    const std::vector<Claim> claims = {
        {"delta(A^a) = -[chi,A]^a - phi^a (triple-bracket expansion)",
         [&](std::size_t a) { return delta_->apply(A(a)); },
         [&](std::size_t a) { return -bin(chi, a_family, a) - phi[a]; }},
        {"delta(A^a) = -phi^a - [A,chi]^a",
         [&](std::size_t a) { return delta_->apply(A(a)); },
         [&](std::size_t a) { return -phi[a] - bin(a_family, chi, a); }},
        {"delta(chi^a) = -1/2 [chi,chi]^a",
         [&](std::size_t a) { return delta_->apply(chi[a]); },
         [&](std::size_t a) { return bin(chi, chi, a) * Rational(-1, 2); }},
        {"delta(phi^a) = [phi,chi]^a",
         [&](std::size_t a) { return delta_->apply(phi[a]); },
         [&](std::size_t a) { return bin(phi, chi, a); }},
    };
    for (const auto& claim : claims) {
        AuditEntry entry;
        entry.list = "ghost";
        entry.name = claim.name;
        bool ok = true;
        std::vector<std::string> residuals;
        for (std::size_t a = 0; a < n; ++a) {
            const GradedElement res = claim.lhs(a) - claim.rhs(a);
            if (!res.is_zero()) ok = false;
            residuals.push_back("a=" + std::to_string(a + 1) + ": " + res.str());
        }
        entry.verdict = ok ? "MATCH" : "MISMATCH";
        if (!ok) entry.residuals = std::move(residuals);
        report.entries.push_back(std::move(entry));
    }

    report.stated_nilpotent = delta_->check_nilpotent();
    report.stated_nilpotent.check = "delta_squared_on_generators";
    report.stated_nilpotent.notes.push_back(
        "nilpotency of this derivation on xi, eta, A is not claimed anywhere; "
        "residuals are reported without an expected verdict");
    return report;
}

}  // namespace nambu
