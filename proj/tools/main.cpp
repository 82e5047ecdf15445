#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nambu/brs.hpp"
#include "nambu/errors.hpp"
#include "nambu/io.hpp"
#include "nambu/nlie.hpp"
#include "nambu/weil.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string builtin;  // name:size
    std::string input;
    bool antisymmetrize = false;
    std::string omega;
    std::size_t arity = 3;
    std::string nlie_path;
    std::size_t cross_product = 0;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 20260823;
    std::size_t trials = 25;
};

std::shared_ptr<const nambu::LieAlgebra> get_algebra(const Options& opt) {
    if (!opt.builtin.empty()) {
        const auto colon = opt.builtin.find(':');
        if (colon == std::string::npos)
            throw nambu::ConfigError("--builtin expects name:size, e.g. gl:2");
        const std::string name = opt.builtin.substr(0, colon);
        const std::size_t size = std::stoul(opt.builtin.substr(colon + 1));
        return nambu::LieAlgebra::builtin(name, size);
    }
    if (!opt.input.empty())
        return nambu::load_algebra(opt.input, opt.antisymmetrize);
    throw nambu::ConfigError("an algebra is required: pass --builtin or --input");
}

nambu::Cochain get_omega(const Options& opt,
                         const std::shared_ptr<const nambu::LieAlgebra>& algebra) {
    if (opt.omega.empty())
        throw nambu::ConfigError("--omega is required for this command");
    return nambu::make_omega(algebra, opt.omega);
}

int emit(const Options& opt, const std::string& command, bool passed,
         ordered_json body) {
    const ordered_json envelope =
        nambu::report_envelope(command, passed, std::move(body));
    std::string text;
    if (opt.format == "text")
        text = nambu::report_to_text(envelope);
    else if (opt.format == "json")
        text = envelope.dump(2) + "\n";
    else
        throw nambu::ConfigError("--format must be json or text");
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw nambu::ConfigError("cannot write '" + opt.output + "'");
        out << text;
    }
    return passed ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt, bool with_omega = true) {
    cmd->add_option("--builtin", opt.builtin, "builtin algebra, name:size (e.g. gl:2)");
    cmd->add_option("--input", opt.input, "Lie algebra JSON file");
    cmd->add_flag("--antisymmetrize", opt.antisymmetrize,
                  "antisymmetrize loaded structure constants instead of rejecting");
    if (with_omega)
        cmd->add_option("--omega", opt.omega,
                        "cochain selector: trace | dual:LABEL | custom:PATH | label sum like x+z");
    cmd->add_option("--output", opt.output, "report file (default: stdout)");
    cmd->add_option("--format", opt.format, "json | text (default json)");
}

ordered_json weil_suite(const nambu::WeilAlgebra& weil, const Options& opt) {
    ordered_json body;
    body["d_squared"] = nambu::report_to_json(weil.d().check_nilpotent());
    body["degree"] = nambu::report_to_json(weil.d().check_degree_consistency());
    body["leibniz"] =
        nambu::report_to_json(weil.d().check_leibniz(opt.seed, opt.trials));
    return body;
}

bool weil_suite_passed(const nambu::WeilAlgebra& weil, const Options& opt) {
    return weil.d().check_nilpotent().passed() &&
           weil.d().check_degree_consistency().passed() &&
           weil.d().check_leibniz(opt.seed, opt.trials).passed();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic verification of induced n-Lie brackets, the extended "
                 "Weil algebra and the B.R.S. bicomplex"};
    app.require_subcommand(1);
    Options opt;

    auto* jacobi = app.add_subcommand("check-jacobi", "Jacobi identity over all basis tuples");
    add_common(jacobi, opt, false);

    auto* induce = app.add_subcommand("induce", "emit the induced n-bracket constants");
    add_common(induce, opt);
    induce->add_option("--arity", opt.arity, "bracket arity (default 3)");

    auto* filippov = app.add_subcommand("check-filippov", "Filippov-Jacobi identity");
    add_common(filippov, opt);
    filippov->add_option("--arity", opt.arity, "bracket arity (default 3)");
    filippov->add_option("--nlie", opt.nlie_path, "n-bracket JSON file (instead of inducing)");
    filippov->add_option("--cross-product", opt.cross_product,
                         "use the Levi-Civita bracket of this arity");

    auto* theorem1 = app.add_subcommand(
        "check-theorem1", "biconditional: cochain condition vs Filippov verdict");
    add_common(theorem1, opt);
    theorem1->add_option("--arity", opt.arity, "bracket arity (default 3)");

    auto* metric = app.add_subcommand(
        "check-metric", "trace-form invariance of the induced ternary bracket");
    add_common(metric, opt);

    auto* weil = app.add_subcommand("weil", "Weil algebra differential checks");
    add_common(weil, opt, false);
    weil->add_option("--seed", opt.seed, "seed for the randomized Leibniz check");
    weil->add_option("--trials", opt.trials, "trials for the randomized Leibniz check");

    auto* weilext = app.add_subcommand(
        "weil-extended", "extension constraint, closed elements, bracketed forms");
    add_common(weilext, opt);

    auto* audit = app.add_subcommand(
        "audit-weil", "audit the displayed extension formulas against derivation");
    add_common(audit, opt);

    auto* brs = app.add_subcommand("brs", "bigraded algebra nilpotency relations");
    add_common(brs, opt, false);

    auto* ghost = app.add_subcommand(
        "brs-ghost", "two-parameter gauge sector and derived ghost/auxiliary fields");
    add_common(ghost, opt);

    auto* full = app.add_subcommand("report", "run every applicable suite");
    add_common(full, opt);
    full->add_option("--seed", opt.seed, "seed for the randomized Leibniz check");
    full->add_option("--trials", opt.trials, "trials for the randomized Leibniz check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (jacobi->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto report = algebra->check_jacobi();
            return emit(opt, "check-jacobi", report.passed(),
                        nambu::report_to_json(report));
        }
        if (induce->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto nlie =
                nambu::NLieAlgebra::induce(algebra, get_omega(opt, algebra), opt.arity);
            return emit(opt, "induce", true, nambu::nlie_to_json(nlie));
        }
        if (filippov->parsed()) {
            std::unique_ptr<nambu::NLieAlgebra> nlie;
            if (opt.cross_product > 0) {
                nlie = std::make_unique<nambu::NLieAlgebra>(
                    nambu::NLieAlgebra::cross_product(opt.cross_product));
            } else if (!opt.nlie_path.empty()) {
                nlie = std::make_unique<nambu::NLieAlgebra>(
                    nambu::load_nlie(opt.nlie_path));
            } else {
                const auto algebra = get_algebra(opt);
                nlie = std::make_unique<nambu::NLieAlgebra>(nambu::NLieAlgebra::induce(
                    algebra, get_omega(opt, algebra), opt.arity));
            }
            const auto report = nlie->check_filippov();
            return emit(opt, "check-filippov", report.passed(),
                        nambu::report_to_json(report));
        }
        if (theorem1->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto report =
                nambu::check_theorem1(algebra, get_omega(opt, algebra), opt.arity);
            return emit(opt, "check-theorem1", report.agree,
                        nambu::report_to_json(report));
        }
        if (metric->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto nlie =
                nambu::NLieAlgebra::induce(algebra, get_omega(opt, algebra), 3);
            const auto form = algebra->trace_form();
            auto report = nlie.check_metric(form);
            report.notes.push_back(std::string("trace form is ") +
                                   (form.nondegenerate ? "nondegenerate" : "degenerate"));
            return emit(opt, "check-metric", report.passed(),
                        nambu::report_to_json(report));
        }
        if (weil->parsed()) {
            const nambu::WeilAlgebra w(get_algebra(opt));
            return emit(opt, "weil", weil_suite_passed(w, opt), weil_suite(w, opt));
        }
        if (weilext->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto omega = get_omega(opt, algebra);
            const auto constraint =
                nambu::ExtendedWeilAlgebra::diagnose_constraint(algebra, omega);
            ordered_json body;
            body["constraint"] = nambu::report_to_json(constraint);
            if (!constraint.passed())
                return emit(opt, "weil-extended", false, std::move(body));
            const nambu::ExtendedWeilAlgebra ext(algebra, omega);
            const auto closed = ext.check_closed_elements();
            const auto tensor_form = ext.tensor_form_check();
            body["closed_elements"] = nambu::report_to_json(closed);
            body["tensor_form"] = nambu::report_to_json(tensor_form);
            return emit(opt, "weil-extended", closed.passed() && tensor_form.passed(),
                        std::move(body));
        }
        if (audit->parsed()) {
            const auto algebra = get_algebra(opt);
            const nambu::ExtendedWeilAlgebra ext(algebra, get_omega(opt, algebra));
            const auto report = ext.audit_paper_formulas();
            return emit(opt, "audit-weil", !report.has_mismatch(),
                        nambu::report_to_json(report));
        }
        if (brs->parsed()) {
            const nambu::BRSAlgebra algebra(get_algebra(opt));
            const auto report = nambu::check_brs_relations(algebra);
            return emit(opt, "brs", report.passed(), nambu::report_to_json(report));
        }
        if (ghost->parsed()) {
            const auto algebra = get_algebra(opt);
            const nambu::GhostDerivation derivation(algebra, get_omega(opt, algebra));
            const auto report = derivation.check_ghost_transformations();
            return emit(opt, "brs-ghost", !report.has_mismatch(),
                        nambu::report_to_json(report));
        }
        if (full->parsed()) {
            const auto algebra = get_algebra(opt);
            const auto omega = get_omega(opt, algebra);
            ordered_json body;
            bool passed = true;

            const auto jac = algebra->check_jacobi();
            body["jacobi"] = nambu::report_to_json(jac);
            passed = passed && jac.passed();

            const auto t1 = nambu::check_theorem1(algebra, omega, opt.arity);
            body["theorem1"] = nambu::report_to_json(t1);
            passed = passed && t1.agree;

            if (opt.arity == 3 && algebra->has_matrix_realization()) {
                const auto nlie = nambu::NLieAlgebra::induce(algebra, omega, 3);
                const auto m = nlie.check_metric(algebra->trace_form());
                body["metric"] = nambu::report_to_json(m);
                passed = passed && m.passed();
            }

            const nambu::WeilAlgebra w(algebra);
            body["weil"] = weil_suite(w, opt);
            passed = passed && weil_suite_passed(w, opt);

            const auto constraint =
                nambu::ExtendedWeilAlgebra::diagnose_constraint(algebra, omega);
            body["constraint"] = nambu::report_to_json(constraint);
            if (constraint.passed() && omega.degree() == 1) {
                const nambu::ExtendedWeilAlgebra ext(algebra, omega);
                const auto closed = ext.check_closed_elements();
                const auto tensor_form = ext.tensor_form_check();
                const auto auditrep = ext.audit_paper_formulas();
                body["closed_elements"] = nambu::report_to_json(closed);
                body["tensor_form"] = nambu::report_to_json(tensor_form);
                body["audit"] = nambu::report_to_json(auditrep);
                passed = passed && closed.passed() && tensor_form.passed() &&
                         !auditrep.has_mismatch();

                const nambu::GhostDerivation derivation(algebra, omega);
                const auto ghostrep = derivation.check_ghost_transformations();
                body["ghost"] = nambu::report_to_json(ghostrep);
                passed = passed && !ghostrep.has_mismatch();
            } else {
                passed = passed && constraint.passed();
            }

            const nambu::BRSAlgebra brs_algebra(algebra);
            const auto rel = nambu::check_brs_relations(brs_algebra);
            body["brs"] = nambu::report_to_json(rel);
            passed = passed && rel.passed();

            return emit(opt, "report", passed, std::move(body));
        }
        throw nambu::ConfigError("no command selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
