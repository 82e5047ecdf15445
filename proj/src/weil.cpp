#include "nambu/weil.hpp"

#include <functional>
#include <map>

#include "nambu/errors.hpp"
#include "nambu/nlie.hpp"

namespace nambu {

namespace {

// Nominal total degrees of the component families inside W(g).
int family_degree(const std::string& family) {
    static const std::map<std::string, int> degrees = {
        {"A", 1},  {"F", 2},  {"chi", 2}, {"phi", 3},
        {"psi", 3}, {"Phi", 3}, {"Xi", 3},  {"Omega", 4}};
    auto it = degrees.find(family);
    if (it == degrees.end()) throw ConfigError("unknown component family '" + family + "'");
    return it->second;
}

std::string factor_str(const FormulaFactor& fac) {
    return fac.label == '?' ? fac.family : fac.family + "^" + std::string(1, fac.label);
}

using ElementFn = std::function<GradedElement(const std::string&, std::size_t)>;
using TensorFn = std::function<Rational(const std::string&, std::span<const std::size_t>)>;

// Evaluates one formula at free index value a over a component-family
// realization; 'a' is the free label, other labels range over 0..n-1.
GradedElement eval_formula(const Formula& formula, std::size_t a, std::size_t n,
                           std::shared_ptr<const GeneratorSet> gens,
                           const ElementFn& elem, const TensorFn& tensor) {
    GradedElement out(gens);
    for (const auto& term : formula.terms) {
        std::vector<char> bound;
        for (std::size_t i = 1; i < term.tensor_labels.size(); ++i)
            bound.push_back(term.tensor_labels[i]);
        std::vector<std::size_t> vals(bound.size(), 0);
        bool done = bound.empty() ? false : false;
        while (true) {
            std::map<char, std::size_t> env{{'a', a}};
            if (!term.tensor_labels.empty()) env[term.tensor_labels[0]] = a;
            for (std::size_t i = 0; i < bound.size(); ++i) env[bound[i]] = vals[i];

            Rational c = term.coeff;
            if (!term.tensor.empty()) {
                std::vector<std::size_t> tidx;
                for (char l : term.tensor_labels) tidx.push_back(env.at(l));
                c *= tensor(term.tensor, tidx);
            }
            if (c != 0) {
                GradedElement prod = GradedElement::unit(gens) * c;
                for (const auto& fac : term.factors) {
                    if (fac.label == '?')
                        throw ConfigError("formula factor " + fac.family +
                                          " has no index label");
                    auto it = env.find(fac.label);
                    if (it == env.end())
                        throw ConfigError("formula label '" +
                                          std::string(1, fac.label) + "' is unbound");
                    prod = prod * elem(fac.family, it->second);
                }
                out = out + prod;
            }
            // advance bound-label odometer
            done = true;
            for (std::size_t i = bound.size(); i-- > 0;) {
                if (++vals[i] < n) {
                    done = false;
                    break;
                }
                vals[i] = 0;
            }
            if (done) break;
        }
    }
    return out;
}

}  // namespace

WeilAlgebra::WeilAlgebra(std::shared_ptr<const LieAlgebra> parent)
    : parent_(std::move(parent)) {
    const std::size_t n = parent_->dim();
    auto gens = std::make_shared<GeneratorSet>(SignRule::TotalParity);
    for (std::size_t a = 0; a < n; ++a)
        gens->add("A" + std::to_string(a + 1), Bidegree{1, 0});
    for (std::size_t a = 0; a < n; ++a)
        gens->add("F" + std::to_string(a + 1), Bidegree{2, 0});
    gens_ = gens;
    d_ = std::make_unique<Differential>(gens_, Bidegree{1, 0});
    for (std::size_t a = 0; a < n; ++a) {
        GradedElement dA = F(a);
        GradedElement dF(gens_);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Rational fv = parent_->f(a, b, c);
                if (fv == 0) continue;
                dA.add_word({id_A(b), id_A(c)}, Rational(-1, 2) * fv);
                dF.add_word({id_F(b), id_A(c)}, fv);
            }
        d_->set_image(id_A(a), std::move(dA));
        d_->set_image(id_F(a), std::move(dF));
    }
}

std::size_t WeilAlgebra::id_A(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("A index out of range");
    return a;
}

std::size_t WeilAlgebra::id_F(std::size_t a) const {
    if (a >= parent_->dim()) throw BoundsError("F index out of range");
    return parent_->dim() + a;
}

GradedElement WeilAlgebra::A(std::size_t a) const {
    return GradedElement::generator(gens_, id_A(a));
}

GradedElement WeilAlgebra::F(std::size_t a) const {
    return GradedElement::generator(gens_, id_F(a));
}

std::string Formula::render() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& term : terms) {
        const bool neg = term.coeff < 0;
        const Rational mag = neg ? Rational(-term.coeff) : term.coeff;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string body;
        if (!term.tensor.empty()) {
            body += term.tensor + "^" + std::string(1, term.tensor_labels[0]) + "_{";
            for (std::size_t i = 1; i < term.tensor_labels.size(); ++i)
                body += term.tensor_labels[i];
            body += "}";
        }
        for (const auto& fac : term.factors) {
            if (!body.empty()) body += " ";
            body += factor_str(fac);
        }
        if (mag != 1)
            s += rational_str(mag) + (body.empty() ? "" : " ");
        else if (body.empty())
            s += "1";
        s += body;
    }
    return s;
}

bool Formula::evaluable() const {
    for (const auto& term : terms)
        for (const auto& fac : term.factors) {
            if (fac.label == '?') return false;
            bool bound = fac.label == 'a';
            for (char l : term.tensor_labels) bound = bound || l == fac.label;
            if (!bound) return false;
        }
    return true;
}

ExtendedWeilAlgebra::ExtendedWeilAlgebra(std::shared_ptr<const LieAlgebra> parent,
                                         Cochain omega)
    : weil_(parent),
      omega_(std::move(omega)),
      k_(NLieAlgebra::induce(parent, omega_, 3).constants()) {
    if (omega_.degree() != 1)
        throw ConfigError("extension cochain must have degree 1");
    const std::size_t n = parent->dim();
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            Rational res(0);
            for (std::size_t a = 0; a < n; ++a)
                res += parent->f(a, b, c) * omega_.coeff(std::vector<std::size_t>{a});
            if (res != 0)
                throw ConfigError("extension cochain violates f^a_{bc} w_a = 0 at (b,c)=(" +
                                  std::to_string(b + 1) + "," + std::to_string(c + 1) +
                                  "), residual " + rational_str(res));
        }
}

CheckReport ExtendedWeilAlgebra::diagnose_constraint(
    std::shared_ptr<const LieAlgebra> parent, const Cochain& omega) {
    if (omega.degree() != 1)
        throw ConfigError("diagnose_constraint: cochain must have degree 1");
    const std::size_t n = parent->dim();
    CheckReport report{.check = "omega_constraint", .notes = {}, .violations = {}};
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            Rational res(0);
            for (std::size_t a = 0; a < n; ++a)
                res += parent->f(a, b, c) * omega.coeff(std::vector<std::size_t>{a});
            if (res != 0) report.violations.push_back(Violation{{b, c}, rational_str(res)});
        }
    // the closed-element defect this causes: d(chi) - phi = -1/2 w_a f^a_{bc} A^b A^c
    WeilAlgebra w(parent);
    GradedElement chi(w.gens()), phi(w.gens());
    for (std::size_t a = 0; a < n; ++a) {
        const Rational wa = omega.coeff(std::vector<std::size_t>{a});
        if (wa == 0) continue;
        chi = chi + w.A(a) * wa;
        phi = phi + w.F(a) * wa;
    }
    report.notes.push_back("d(chi) - phi = " + (w.d().apply(chi) - phi).str());
    return report;
}

GradedElement ExtendedWeilAlgebra::chi() const {
    GradedElement e(weil_.gens());
    for (std::size_t a = 0; a < weil_.parent()->dim(); ++a) {
        const Rational wa = omega_.coeff(std::vector<std::size_t>{a});
        if (wa != 0) e = e + weil_.A(a) * wa;
    }
    return e;
}

GradedElement ExtendedWeilAlgebra::phi() const {
    GradedElement e(weil_.gens());
    for (std::size_t a = 0; a < weil_.parent()->dim(); ++a) {
        const Rational wa = omega_.coeff(std::vector<std::size_t>{a});
        if (wa != 0) e = e + weil_.F(a) * wa;
    }
    return e;
}

GradedElement ExtendedWeilAlgebra::element(const std::string& family,
                                           std::size_t index) const {
    if (index >= weil_.parent()->dim())
        throw BoundsError("component index out of range");
    if (family == "A") return weil_.A(index);
    if (family == "F") return weil_.F(index);
    if (family == "chi") return chi() * weil_.A(index);
    if (family == "phi") return phi() * weil_.A(index);
    if (family == "psi") return chi() * weil_.F(index);
    if (family == "Omega") return phi() * weil_.F(index);
    if (family == "Xi") return element("phi", index) + element("psi", index);
    if (family == "Phi") return element("phi", index) - element("psi", index);
    throw ConfigError("unknown component family '" + family + "'");
}

GradedElement ExtendedWeilAlgebra::derive_formula(const std::string& family,
                                                  std::size_t index) const {
    return weil_.d().apply(element(family, index));
}

CheckReport ExtendedWeilAlgebra::check_closed_elements() const {
    CheckReport report{.check = "closed_elements", .notes = {}, .violations = {}};
    const GradedElement r1 = weil_.d().apply(chi()) - phi();
    if (!r1.is_zero())
        report.violations.push_back(Violation{{0}, "d(chi) - phi = " + r1.str()});
    const GradedElement r2 = weil_.d().apply(phi());
    if (!r2.is_zero())
        report.violations.push_back(Violation{{1}, "d(phi) = " + r2.str()});
    report.notes.push_back("d(chi) = phi and d(phi) = 0, expanded inside the parent "
                           "differential algebra");
    return report;
}

GradedElement ExtendedWeilAlgebra::evaluate_formula(const Formula& formula,
                                                    std::size_t a) const {
    const std::size_t n = weil_.parent()->dim();
    return eval_formula(
        formula, a, n, weil_.gens(),
        [this](const std::string& fam, std::size_t i) { return element(fam, i); },
        [this](const std::string& t, std::span<const std::size_t> idx) {
            return t == "f" ? weil_.parent()->f(idx[0], idx[1], idx[2]) : k_.at(idx);
        });
}

namespace {

FormulaTerm term(Rational coeff, std::string tensor, std::vector<char> tlabels,
                 std::vector<FormulaFactor> factors) {
    return FormulaTerm{std::move(coeff), std::move(tensor), std::move(tlabels),
                       std::move(factors)};
}

struct DisplayedFormula {
    std::string list;
    std::string name;
    Formula formula;
};

// Every displayed image of the extended differential, as printed.
std::vector<DisplayedFormula> displayed_formulas() {
    std::vector<DisplayedFormula> out;
    const Formula d_chi{"chi",
                        {term(1, "", {}, {{"phi", 'a'}}),
                         term(-1, "", {}, {{"psi", 'a'}}),
                         term(Rational(1, 6), "K", {'a', 'b', 'c', 'd'},
                              {{"A", 'b'}, {"A", 'c'}, {"A", 'd'}})}};
    const Formula d_phi{"phi",
                        {term(1, "", {}, {{"Omega", 'a'}}),
                         term(Rational(-1, 2), "f", {'a', 'b', 'c'},
                              {{"phi", 'a'}, {"A", 'c'}})}};
    const Formula d_psi{"psi",
                        {term(1, "", {}, {{"Omega", 'a'}}),
                         term(-1, "f", {'a', 'b', 'c'}, {{"psi", 'a'}, {"A", 'c'}})}};
    const Formula d_omega_first{
        "Omega", {term(1, "f", {'a', 'b', 'c'}, {{"Omega", 'b'}, {"A", 'c'}})}};
    const Formula d_Phi{"Phi",
                        {term(Rational(1, 2), "f", {'a', 'b', 'c'},
                              {{"A", 'b'}, {"Phi", 'c'}}),
                         term(Rational(-3, 2), "K", {'a', 'b', 'c', 'd'},
                              {{"F", 'b'}, {"A", 'c'}, {"A", 'd'}})}};
    const Formula d_Xi{"Xi",
                       {term(2, "", {}, {{"Omega", 'a'}}),
                        term(Rational(-1, 2), "f", {'a', 'b', 'c'},
                             {{"A", 'b'}, {"Xi", 'c'}}),
                        term(Rational(-1, 2), "f", {'a', 'b', 'c'},
                             {{"A", 'b'}, {"Phi", 'c'}}),
                        term(Rational(1, 2), "K", {'a', 'b', 'c', 'd'},
                             {{"F", 'b'}, {"A", 'c'}, {"A", 'd'}})}};
    Formula d_Xi_bare = d_Xi;
    d_Xi_bare.terms[1].factors[1].label = '?';
    const Formula d_omega_kfff{
        "Omega", {term(1, "K", {'a', 'b', 'c', 'd'},
                       {{"F", 'b'}, {"F", 'c'}, {"F", 'd'}})}};
    const Formula d_A{"A",
                      {term(1, "", {}, {{"F", 'a'}}),
                       term(Rational(-1, 2), "f", {'a', 'b', 'c'},
                            {{"A", 'b'}, {"A", 'c'}})}};
    const Formula d_F{"F",
                      {term(1, "f", {'a', 'b', 'c'}, {{"F", 'b'}, {"A", 'c'}})}};
    const Formula d_chi_Phi{"chi",
                            {term(1, "", {}, {{"Phi", 'a'}}),
                             term(Rational(1, 6), "K", {'a', 'b', 'c', 'd'},
                                  {{"A", 'b'}, {"A", 'c'}, {"A", 'd'}})}};

    out.push_back({"first", "d(chi^a)", d_chi});
    out.push_back({"first", "d(phi^a)", d_phi});
    out.push_back({"first", "d(psi^a)", d_psi});
    out.push_back({"first", "d(Omega^a)", d_omega_first});
    out.push_back({"transformed", "d(Phi^a)", d_Phi});
    out.push_back({"transformed", "d(Xi^a)", d_Xi});
    out.push_back({"transformed", "d(Omega^a)", d_omega_kfff});
    out.push_back({"defining", "d(A^a)", d_A});
    out.push_back({"defining", "d(F^a)", d_F});
    out.push_back({"defining", "d(chi^a)", d_chi_Phi});
    out.push_back({"defining", "d(Phi^a)", d_Phi});
    out.push_back({"defining", "d(Xi^a)", d_Xi_bare});
    out.push_back({"defining", "d(Omega^a)", d_omega_kfff});
    return out;
}

}  // namespace

AuditReport ExtendedWeilAlgebra::audit_paper_formulas() const {
    const std::size_t n = weil_.parent()->dim();
    AuditReport report;
    report.notes.push_back(
        "ground truth: images derived by the Leibniz rule from the composite "
        "definitions inside the parent differential algebra");
    report.notes.push_back(
        "repair policy: only single-index substitutions are attempted, and every "
        "applied repair is reported");

    for (const auto& df : displayed_formulas()) {
        AuditEntry entry;
        entry.list = df.list;
        entry.name = df.name;
        entry.stated = df.formula.render();

        // degree audit on the syntax tree, before any cancellation
        const int expected = family_degree(df.formula.lhs_family) + 1;
        for (std::size_t t = 0; t < df.formula.terms.size(); ++t) {
            int deg = 0;
            for (const auto& fac : df.formula.terms[t].factors)
                deg += family_degree(fac.family);
            if (deg != expected) {
                entry.degree_consistent = false;
                if (!entry.degree_note.empty()) entry.degree_note += "; ";
                entry.degree_note += "term " + std::to_string(t + 1) + " has degree " +
                                     std::to_string(deg) + ", expected " +
                                     std::to_string(expected);
            }
        }

        // derived ground truth per free index
        std::vector<GradedElement> derived;
        derived.reserve(n);
        for (std::size_t a = 0; a < n; ++a)
            derived.push_back(derive_formula(df.formula.lhs_family, a));

        auto matches = [&](const Formula& candidate) {
            if (!candidate.evaluable()) return false;
            for (std::size_t a = 0; a < n; ++a)
                if (!(evaluate_formula(candidate, a) - derived[a]).is_zero())
                    return false;
            return true;
        };

        if (matches(df.formula)) {
            entry.verdict = "MATCH";
        } else {
            bool repaired = false;
            for (std::size_t t = 0; t < df.formula.terms.size() && !repaired; ++t) {
                const auto& trm = df.formula.terms[t];
                std::vector<char> labels{'a'};
                for (std::size_t i = 1; i < trm.tensor_labels.size(); ++i)
                    labels.push_back(trm.tensor_labels[i]);
                for (std::size_t fi = 0; fi < trm.factors.size() && !repaired; ++fi)
                    for (char l : labels) {
                        if (l == trm.factors[fi].label) continue;
                        Formula candidate = df.formula;
                        candidate.terms[t].factors[fi].label = l;
                        if (matches(candidate)) {
                            entry.verdict = "INDEX-TYPO";
                            entry.repair =
                                "term " + std::to_string(t + 1) + ": " +
                                factor_str(trm.factors[fi]) + " -> " +
                                factor_str(candidate.terms[t].factors[fi]);
                            repaired = true;
                            break;
                        }
                    }
            }
            if (!repaired) {
                entry.verdict = "MISMATCH";
                for (std::size_t a = 0; a < n; ++a) {
                    GradedElement res =
                        df.formula.evaluable()
                            ? evaluate_formula(df.formula, a) - derived[a]
                            : -derived[a];
                    entry.residuals.push_back("a=" + std::to_string(a + 1) + ": " +
                                              res.str());
                }
                if (!df.formula.evaluable())
                    entry.residuals.push_back(
                        "note: stated formula has an unbound factor index; residual "
                        "shown against 0");
            }
        }
        report.entries.push_back(std::move(entry));
    }

    // The displayed defining images, taken literally as a differential on the
    // six-family generator set; its nilpotency is a reported outcome.
    auto gens = std::make_shared<GeneratorSet>(SignRule::TotalParity);
    const std::vector<std::pair<std::string, Bidegree>> families = {
        {"A", {1, 0}}, {"F", {2, 0}},  {"chi", {2, 0}},
        {"Phi", {3, 0}}, {"Xi", {3, 0}}, {"Omega", {4, 0}}};
    std::map<std::string, std::size_t> base;
    for (const auto& [fam, deg] : families) {
        base[fam] = gens->size();
        for (std::size_t a = 0; a < n; ++a)
            gens->add(fam + std::to_string(a + 1), deg);
    }
    std::shared_ptr<const GeneratorSet> cgens = gens;
    const ElementFn elem = [&](const std::string& fam, std::size_t i) {
        return GradedElement::generator(cgens, base.at(fam) + i);
    };
    const TensorFn tensor = [this](const std::string& t,
                                   std::span<const std::size_t> idx) {
        return t == "f" ? weil_.parent()->f(idx[0], idx[1], idx[2]) : k_.at(idx);
    };
    Differential stated(cgens, Bidegree{1, 0});
    const auto all = displayed_formulas();
    for (const auto& df : all) {
        if (df.list != "defining") continue;
        Formula f = df.formula;
        if (!f.evaluable()) {
            // minimal documented repair so the literal differential exists
            for (auto& trm : f.terms)
                for (auto& fac : trm.factors)
                    if (fac.label == '?') fac.label = 'c';
            report.notes.push_back("stated differential: unbound index in " + df.name +
                                   " bound to the tensor label c for construction");
        }
        for (std::size_t a = 0; a < n; ++a)
            stated.set_image(base.at(f.lhs_family) + a,
                             eval_formula(f, a, n, cgens, elem, tensor));
    }
    report.stated_nilpotent = stated.check_nilpotent();
    report.stated_nilpotent.check = "stated_differential_nilpotent";
    return report;
}

bool AuditReport::has_mismatch() const {
    for (const auto& e : entries)
        if (e.verdict == "MISMATCH") return true;
    return false;
}

CheckReport ExtendedWeilAlgebra::tensor_form_check() const {
    const std::size_t n = weil_.parent()->dim();
    CheckReport report{.check = "tensor_form", .notes = {}, .violations = {}};
    report.notes.push_back(
        "binary bracket [X ten L, Y ten M] = [X,Y] ten L*M and its ternary analog, "
        "expanded componentwise via f and K");

    auto bin = [&](const std::string& famx, const std::string& famy, std::size_t a) {
        GradedElement out(weil_.gens());
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Rational fv = weil_.parent()->f(a, b, c);
                if (fv != 0) out = out + element(famx, b) * element(famy, c) * fv;
            }
        return out;
    };
    auto tri = [&](const std::string& famx, const std::string& famy,
                   const std::string& famz, std::size_t a) {
        GradedElement out(weil_.gens());
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Rational kv = k_.at({a, b, c, d});
                    if (kv != 0)
                        out = out + element(famx, b) * element(famy, c) *
                                        element(famz, d) * kv;
                }
        return out;
    };

    // Component references are the displayed component formulas themselves
    // (with the unbound Xi index bound to c so they can be evaluated); whether
    // those formulas are CORRECT is the audit's business, this check only
    // verifies that the bracketed rewriting reproduces them.
    std::map<std::string, Formula> component;
    for (const auto& df : displayed_formulas()) {
        if (df.list != "defining") continue;
        Formula f = df.formula;
        for (auto& trm : f.terms)
            for (auto& fac : trm.factors)
                if (fac.label == '?') fac.label = 'c';
        component[f.lhs_family] = f;
    }

    struct Entry {
        std::string name;
        std::string family;
        std::function<GradedElement(std::size_t)> tensor_form;
    };
    const std::vector<Entry> entries = {
        {"d(A) = F - 1/2 [A,A]", "A",
         [&](std::size_t a) {
             return element("F", a) + bin("A", "A", a) * Rational(-1, 2);
         }},
        {"d(F) = [F,A]", "F", [&](std::size_t a) { return bin("F", "A", a); }},
        {"d(chi) = Phi + 1/3! [A,A,A]", "chi",
         [&](std::size_t a) {
             return element("Phi", a) + tri("A", "A", "A", a) * Rational(1, 6);
         }},
        {"d(Phi) = 1/2 [A,Phi] - 3/2 [F,A,A]", "Phi",
         [&](std::size_t a) {
             return bin("A", "Phi", a) * Rational(1, 2) +
                    tri("F", "A", "A", a) * Rational(-3, 2);
         }},
        {"d(Xi) = 2 Omega - 1/2 [A,Xi] - 1/2 [A,Phi] + 1/2 [F,A,A]", "Xi",
         [&](std::size_t a) {
             return element("Omega", a) * Rational(2) +
                    bin("A", "Xi", a) * Rational(-1, 2) +
                    bin("A", "Phi", a) * Rational(-1, 2) +
                    tri("F", "A", "A", a) * Rational(1, 2);
         }},
        {"d(Omega) = [F,F,F]", "Omega",
         [&](std::size_t a) { return tri("F", "F", "F", a); }},
    };

    for (std::size_t e = 0; e < entries.size(); ++e)
        for (std::size_t a = 0; a < n; ++a) {
            const GradedElement res =
                entries[e].tensor_form(a) -
                evaluate_formula(component.at(entries[e].family), a);
            if (!res.is_zero())
                report.violations.push_back(
                    Violation{{e, a}, entries[e].name + ": " + res.str()});
        }
    report.notes.push_back(
        "reference: the displayed component formulas with the unbound Xi index "
        "bound to c; formula correctness itself is covered by the audit");
    return report;
}

}  // namespace nambu
