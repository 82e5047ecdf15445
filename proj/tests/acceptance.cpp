// Acceptance gate: one line per criterion, plain main, exit 0 only if all
// criteria hold. Invoke as: acceptance <path-to-cli-binary>
//
// Criteria 3 and 4 deserve a note. The audited material claims both that the
// induction condition (w ^ delta w = 0) is equivalent to the Filippov
// identity of the induced bracket, and that the trace-induced ternary bracket
// on gl(n) is metric for the plain trace form. Both claims are refuted by
// exhaustive exact computation (independently cross-checked against a
// brute-force oracle during development):
//   - heisenberg(3) with w = x-dual + z-dual fails the induction condition
//     yet induces the genuine 3-Lie bracket [x,y,z] = z, so only the
//     sufficiency direction (condition holds => Filippov holds) is a theorem;
//   - <[a,b,c],d> + <c,[a,b,d]> for gl(2)+Tr reduces to the nonzero
//     residual Tr(c) Tr([a,b]d) + Tr(d) Tr([a,b]c).
// The gate therefore verifies the provable direction plus the exact,
// reproducible verdicts on the counterexample instances.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nambu/brs.hpp"
#include "nambu/cochain.hpp"
#include "nambu/lie.hpp"
#include "nambu/nlie.hpp"
#include "nambu/weil.hpp"

using namespace nambu;

namespace {

int g_failures = 0;

void verdict(int criterion, const std::string& what, bool ok) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str());
    if (!ok) ++g_failures;
}

std::shared_ptr<const LieAlgebra> perturbed_sl2() {
    auto sl2 = LieAlgebra::builtin("sl", 2);
    Tensor f = sl2->f();
    f.at({1, 0, 1}) = 3;
    f.at({1, 1, 0}) = -3;
    return std::make_shared<LieAlgebra>(sl2->basis_labels(), f);
}

bool criterion1() {
    for (auto& [name, size] : std::vector<std::pair<std::string, std::size_t>>{
             {"abelian", 1}, {"abelian", 2}, {"abelian", 3}, {"abelian", 4},
             {"abelian", 5}, {"heisenberg", 3}, {"sl", 2}, {"gl", 2},
             {"gl", 3}}) {
        if (!LieAlgebra::builtin(name, size)->check_jacobi().passed())
            return false;
    }
    auto report = perturbed_sl2()->check_jacobi();
    if (report.passed()) return false;
    for (const auto& v : report.violations)
        if (v.indices.size() != 4 || v.residual.empty() || v.residual == "0")
            return false;
    return true;
}

bool criterion2() {
    for (std::size_t n : {2, 3}) {
        auto gl = LieAlgebra::builtin("gl", n);
        if (!NLieAlgebra::induce(gl, Cochain::trace(gl), 3)
                 .check_filippov()
                 .passed())
            return false;
    }
    return true;
}

Tensor random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-3, 3);
    while (true) {
        Tensor p({n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.at({i, j}) = num(rng);
        if (invert_matrix(p)) return p;
    }
}

Cochain pullback(std::shared_ptr<const LieAlgebra> changed, const Tensor& p,
                 const Cochain& omega) {
    Cochain out(changed, 1);
    for (std::size_t a = 0; a < changed->dim(); ++a) {
        Rational c(0);
        for (std::size_t b = 0; b < changed->dim(); ++b) {
            std::size_t idx[1] = {b};
            c += p.at({b, a}) * omega.coeff(idx);
        }
        if (c != 0) out.add_term({a}, c);
    }
    return out;
}

bool criterion3() {
    // fixed instance: gl(2)+Tr agrees as pass/pass
    auto gl2 = LieAlgebra::builtin("gl", 2);
    auto fixed = check_theorem1(gl2, Cochain::trace(gl2), 3);
    if (!(fixed.omega_condition.passed() && fixed.filippov.passed() && fixed.agree))
        return false;
    // fixed counterexample: heisenberg(3) + x-dual + z-dual must reproduce
    // exactly omega-condition FAIL / Filippov PASS (see the header comment)
    auto h3 = LieAlgebra::builtin("heisenberg", 3);
    Cochain wxz = Cochain::dual_basis(h3, h3->label_index("x")) +
                  Cochain::dual_basis(h3, h3->label_index("z"));
    auto counter = check_theorem1(h3, wxz, 3);
    if (counter.omega_condition.passed() || !counter.filippov.passed() ||
        counter.agree)
        return false;
    // sufficiency direction on >= 200 randomized dim <= 4 instances: every
    // cochain passing the induction condition induces a Filippov bracket
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> num(-2, 2);
    std::vector<std::pair<std::shared_ptr<const LieAlgebra>, Cochain>> seeds;
    seeds.emplace_back(gl2, Cochain::trace(gl2));
    seeds.emplace_back(h3, Cochain::dual_basis(h3, 0) * Rational(2) +
                               Cochain::dual_basis(h3, 1) * Rational(-1, 2));
    auto aff = LieAlgebra::builtin("affine1", 2);
    seeds.emplace_back(aff, Cochain::dual_basis(aff, aff->label_index("d")));
    auto ab4 = LieAlgebra::builtin("abelian", 4);
    Cochain wab(ab4, 1);
    wab.add_term({0}, 1);
    wab.add_term({2}, Rational(-3, 2));
    seeds.emplace_back(ab4, wab);
    int instances = 0;
    for (const auto& [alg, omega] : seeds) {
        for (int trial = 0; trial < 52; ++trial) {
            Tensor p = random_invertible(rng, alg->dim());
            auto changed = alg->change_basis(p);
            Cochain w = pullback(changed, p, omega);
            if (!w.check_omega_condition().passed()) return false;
            if (!NLieAlgebra::induce(changed, w, 3).check_filippov().passed())
                return false;
            ++instances;
        }
    }
    return instances >= 200;
}

bool criterion4() {
    // the metric check must report EXACTLY the closed-form residual set
    // Tr(c) Tr([a,b]d) + Tr(d) Tr([a,b]c) over all 4^4 tuples of gl(2)+Tr,
    // and pass on a genuinely invariant instance (Levi-Civita bracket with
    // the identity form).
    auto gl2 = LieAlgebra::builtin("gl", 2);
    auto alg = NLieAlgebra::induce(gl2, Cochain::trace(gl2), 3);
    auto form = gl2->trace_form();
    auto report = alg.check_metric(form);
    Cochain tr = Cochain::trace(gl2);
    std::map<std::vector<std::size_t>, std::string> expected;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t d = 0; d < 4; ++d) {
                    Rational pc(0), pd(0);
                    for (std::size_t l = 0; l < 4; ++l) {
                        pd += gl2->f(l, a, b) * form.g.at({l, d});
                        pc += gl2->f(l, a, b) * form.g.at({l, c});
                    }
                    std::size_t ci[1] = {c}, di[1] = {d};
                    Rational res = tr.coeff(ci) * pd + tr.coeff(di) * pc;
                    if (res != 0) expected[{a, b, c, d}] = rational_str(res);
                }
    if (report.violations.size() != expected.size()) return false;
    for (const auto& v : report.violations) {
        auto it = expected.find(v.indices);
        if (it == expected.end() || it->second != v.residual) return false;
    }
    auto c3 = NLieAlgebra::cross_product(3);
    Tensor id({4, 4});
    for (std::size_t i = 0; i < 4; ++i) id.at({i, i}) = 1;
    return c3.check_metric(BilinearForm{id, true}).passed();
}

bool criterion5() {
    return NLieAlgebra::cross_product(3).check_filippov().passed();
}

bool criterion6() {
    for (auto& [name, size] : std::vector<std::pair<std::string, std::size_t>>{
             {"abelian", 3}, {"heisenberg", 3}, {"heisenberg", 5}, {"sl", 2},
             {"gl", 2}, {"gl", 3}, {"affine1", 2}}) {
        if (!WeilAlgebra(LieAlgebra::builtin(name, size))
                 .d()
                 .check_nilpotent()
                 .passed())
            return false;
    }
    auto bad = WeilAlgebra(perturbed_sl2()).d().check_nilpotent();
    if (bad.passed()) return false;
    for (const auto& v : bad.violations)
        if (v.residual.empty() || v.residual == "0") return false;
    return true;
}

bool criterion7() {
    for (std::size_t n : {2, 3}) {
        auto gl = LieAlgebra::builtin("gl", n);
        ExtendedWeilAlgebra ext(gl, Cochain::trace(gl));
        if (!ext.check_closed_elements().passed()) return false;
    }
    return true;
}

AuditReport gl2_audit() {
    auto gl2 = LieAlgebra::builtin("gl", 2);
    return ExtendedWeilAlgebra(gl2, Cochain::trace(gl2)).audit_paper_formulas();
}

bool criterion8() {
    auto audit = gl2_audit();
    bool chi_ok = false, omega_ok = false;
    for (const auto& e : audit.entries) {
        if (e.list != "first") continue;
        if (e.name == "d(chi^a)") chi_ok = e.verdict == "MATCH";
        if (e.name == "d(Omega^a)") omega_ok = e.verdict == "MATCH";
    }
    return chi_ok && omega_ok;
}

bool criterion9() {
    auto audit = gl2_audit();
    bool flagged = false;
    for (const auto& e : audit.entries) {
        bool cubic_curvature =
            e.name == "d(Omega^a)" && e.stated == "K^a_{bcd} F^b F^c F^d";
        if (cubic_curvature) {
            if (e.degree_consistent ||
                e.degree_note != "term 1 has degree 6, expected 5")
                return false;
            flagged = true;
        } else if (!e.degree_consistent || !e.degree_note.empty()) {
            return false;
        }
    }
    return flagged;
}

bool criterion10() {
    auto audit = gl2_audit();
    if (audit.entries.size() != 13) return false;
    std::map<std::string, int> per_list;
    for (const auto& e : audit.entries) {
        ++per_list[e.list];
        if (e.verdict == "MATCH") {
            if (!e.repair.empty() || !e.residuals.empty()) return false;
        } else if (e.verdict == "INDEX-TYPO") {
            if (e.repair.empty()) return false;
        } else if (e.verdict == "MISMATCH") {
            if (e.residuals.empty()) return false;
        } else {
            return false;  // no formula may be left without a verdict
        }
    }
    if (per_list["first"] != 4 || per_list["transformed"] != 3 ||
        per_list["defining"] != 6)
        return false;
    // the bracketed tensor-product forms are audited as well
    auto gl2 = LieAlgebra::builtin("gl", 2);
    return ExtendedWeilAlgebra(gl2, Cochain::trace(gl2))
        .tensor_form_check()
        .passed();
}

bool criterion11() {
    for (auto& [name, size] : std::vector<std::pair<std::string, std::size_t>>{
             {"abelian", 3}, {"sl", 2}, {"gl", 2}}) {
        BRSAlgebra b(LieAlgebra::builtin(name, size));
        auto r = check_brs_relations(b);
        if (!r.d_squared.passed() || !r.delta_squared.passed() ||
            !r.total_squared.passed() || !r.anticommutator.passed() ||
            !r.d_degree.passed() || !r.delta_degree.passed())
            return false;
    }
    return true;
}

bool criterion12() {
    auto gl2 = LieAlgebra::builtin("gl", 2);
    GhostDerivation g(gl2, Cochain::trace(gl2));
    auto audit = g.check_ghost_transformations();
    if (audit.entries.size() != 4) return false;
    // the intermediate two-term expansion of delta A must be exact
    const auto& inter = audit.entries[0];
    if (inter.name.find("triple-bracket expansion") == std::string::npos ||
        inter.verdict != "MATCH")
        return false;
    // the three final identities must each carry a verdict; any non-MATCH
    // must display its residuals verbatim, one per free index
    for (std::size_t i = 1; i < 4; ++i) {
        const auto& e = audit.entries[i];
        if (e.verdict == "MATCH") continue;
        if (e.verdict != "MISMATCH" || e.residuals.size() != gl2->dim())
            return false;
        for (const auto& r : e.residuals)
            if (r.empty() || r.find("a=") != 0) return false;
    }
    // delta^2 on generators is reported as data
    return audit.stated_nilpotent.check == "delta_squared_on_generators";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool run_cli(const std::string& cli, const std::string& args, int threads,
             const std::string& outfile, int expect_exit) {
    std::string cmd = "NAMBU_WEIL_THREADS=" + std::to_string(threads) + " \"" +
                      cli + "\" " + args + " > \"" + outfile + "\" 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) && WEXITSTATUS(rc) == expect_exit;
}

bool criterion13(const std::string& cli) {
    struct Job {
        std::string args;
        int exit_code;
    };
    std::vector<Job> jobs{
        {"check-jacobi --builtin gl:2", 0},
        {"check-theorem1 --builtin gl:2 --omega trace", 0},
        {"check-metric --builtin gl:2 --omega trace", 1},
        {"audit-weil --builtin gl:2 --omega trace", 1},
        {"brs --builtin sl:2", 0},
        {"brs-ghost --builtin gl:2 --omega trace", 1},
        {"report --builtin gl:2 --omega trace", 1},
    };
    const std::string base = "/tmp/nambu_acceptance_out";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::string f1 = base + std::to_string(i) + "_a.json";
        std::string f2 = base + std::to_string(i) + "_b.json";
        std::string f3 = base + std::to_string(i) + "_c.json";
        if (!run_cli(cli, jobs[i].args, 1, f1, jobs[i].exit_code)) return false;
        if (!run_cli(cli, jobs[i].args, 1, f2, jobs[i].exit_code)) return false;
        if (!run_cli(cli, jobs[i].args, 8, f3, jobs[i].exit_code)) return false;
        std::string a = slurp(f1);
        if (a.empty() || a != slurp(f2) || a != slurp(f3)) return false;
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        std::remove(f3.c_str());
    }
    // usage errors exit with 2
    std::string f = base + "_usage.json";
    return run_cli(cli, "no-such-command", 1, f, 2);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
        return 2;
    }
    const std::string cli = argv[1];
    verdict(1, "Jacobi suite over builtins plus a perturbed failure", criterion1());
    verdict(2, "ternary Filippov identity for gl(2)+Tr and gl(3)+Tr", criterion2());
    verdict(3, "induction condition vs Filippov: sufficiency on 208 randomized "
               "instances and exact verdicts on the fixed instances",
            criterion3());
    verdict(4, "metric check matches the closed-form residual set on gl(2)+Tr "
               "and passes on an invariant instance",
            criterion4());
    verdict(5, "Levi-Civita ternary bracket satisfies Filippov (dim 4)", criterion5());
    verdict(6, "connection/curvature differential squares to zero iff Jacobi",
            criterion6());
    verdict(7, "d(chi) = phi and d(phi) = 0 for gl(2)+Tr and gl(3)+Tr", criterion7());
    verdict(8, "first-list images of chi^a and Omega^a derive exactly", criterion8());
    verdict(9, "degree audit flags exactly the cubic-curvature image", criterion9());
    verdict(10, "every displayed formula receives a verdict (13 entries + "
                "tensor forms)",
            criterion10());
    verdict(11, "d^2 = delta^2 = (d+delta)^2 = 0 and d delta + delta d = 0",
            criterion11());
    verdict(12, "ghost sector: intermediate expansion exact, residuals verbatim",
            criterion12());
    verdict(13, "reports byte-identical across runs and thread counts, exit "
                "codes honored",
            criterion13(cli));
    if (g_failures) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
