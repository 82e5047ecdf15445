#include "nambu/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

using nlohmann::ordered_json;

ordered_json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

const ordered_json& field(const ordered_json& j, const std::string& name,
                          const std::string& path) {
    if (!j.contains(name))
        throw ParseError(path + ": missing field '" + name + "'");
    return j.at(name);
}

std::size_t read_index(const ordered_json& j, std::size_t dim,
                       const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": index must be an integer");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw ParseError(where + ": index " + std::to_string(v) +
                         " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

Rational read_rational(const ordered_json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": rational values must be strings like \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

std::shared_ptr<const LieAlgebra> load_algebra(const std::string& path,
                                               bool auto_antisymmetrize) {
    const ordered_json j = parse_file(path);
    const auto& jdim = field(j, "dim", path);
    if (!jdim.is_number_integer() || jdim.get<long long>() < 1)
        throw ParseError(path + ": 'dim' must be a positive integer");
    const std::size_t n = jdim.get<std::size_t>();

    std::vector<std::string> labels;
    if (j.contains("basis")) {
        for (const auto& l : j.at("basis")) {
            if (!l.is_string()) throw ParseError(path + ": 'basis' entries must be strings");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != n)
            throw ParseError(path + ": 'basis' must list exactly " + std::to_string(n) +
                             " labels");
    } else {
        for (std::size_t i = 1; i <= n; ++i) labels.push_back("T" + std::to_string(i));
    }

    Tensor f({n, n, n});
    for (const auto& entry : field(j, "f", path)) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError(path + ": each 'f' entry must be [b, c, a, \"p/q\"]");
        const std::size_t b = read_index(entry[0], n, path + ": f");
        const std::size_t c = read_index(entry[1], n, path + ": f");
        const std::size_t a = read_index(entry[2], n, path + ": f");
        const Rational v = read_rational(entry[3], path + ": f");
        if (auto_antisymmetrize) {
            f.at({a, b, c}) += v;
        } else {
            if (b >= c)
                throw ParseError(path + ": antisymmetry violation at (" +
                                 std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                 "," + std::to_string(c + 1) +
                                 "): entries must have b < c");
            f.at({a, b, c}) += v;
            f.at({a, c, b}) -= v;
        }
    }
    if (auto_antisymmetrize) f = f.antisymmetrized({1, 2});
    return std::make_shared<LieAlgebra>(std::move(labels), std::move(f));
}

Cochain load_cochain(const std::string& path,
                     std::shared_ptr<const LieAlgebra> parent) {
    const ordered_json j = parse_file(path);
    const auto& jdeg = field(j, "degree", path);
    if (!jdeg.is_number_integer() || jdeg.get<long long>() < 0)
        throw ParseError(path + ": 'degree' must be a non-negative integer");
    Cochain w(parent, jdeg.get<std::size_t>());
    for (const auto& entry : field(j, "entries", path)) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
            throw ParseError(path + ": each entry must be [[i1,...,ik], \"p/q\"]");
        std::vector<std::size_t> idx;
        for (const auto& i : entry[0])
            idx.push_back(read_index(i, parent->dim(), path + ": entries"));
        w.add_term(std::move(idx), read_rational(entry[1], path + ": entries"));
    }
    return w;
}

NLieAlgebra load_nlie(const std::string& path) {
    const ordered_json j = parse_file(path);
    const auto& jar = field(j, "arity", path);
    const auto& jdim = field(j, "dim", path);
    if (!jar.is_number_integer() || jar.get<long long>() < 2)
        throw ParseError(path + ": 'arity' must be an integer >= 2");
    if (!jdim.is_number_integer() || jdim.get<long long>() < 1)
        throw ParseError(path + ": 'dim' must be a positive integer");
    const std::size_t arity = jar.get<std::size_t>();
    const std::size_t n = jdim.get<std::size_t>();

    Tensor k(std::vector<std::size_t>(arity + 1, n));
    for (const auto& entry : field(j, "k", path)) {
        if (!entry.is_array() || entry.size() != arity + 2)
            throw ParseError(path + ": each 'k' entry must be [a, b1..bn, \"p/q\"]");
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i + 1 < entry.size(); ++i)
            idx.push_back(read_index(entry[i], n, path + ": k"));
        for (std::size_t i = 2; i < idx.size(); ++i)
            if (idx[i - 1] >= idx[i])
                throw ParseError(path + ": 'k' lower indices must be strictly increasing");
        const Rational v = read_rational(entry[arity + 1], path + ": k");
        // spread over the antisymmetric orbit of the lower indices
        std::vector<std::size_t> perm(idx.begin() + 1, idx.end());
        std::sort(perm.begin(), perm.end());
        do {
            int sign = 1;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t l = i + 1; l < perm.size(); ++l)
                    if (perm[i] > perm[l]) sign = -sign;
            std::vector<std::size_t> full{idx[0]};
            full.insert(full.end(), perm.begin(), perm.end());
            k.at(full) = Rational(sign) * v;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return NLieAlgebra(arity, std::move(k));
}

nlohmann::ordered_json algebra_to_json(const LieAlgebra& algebra) {
    ordered_json j;
    const std::size_t n = algebra.dim();
    j["dim"] = n;
    j["basis"] = algebra.basis_labels();
    ordered_json entries = ordered_json::array();
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
            for (std::size_t a = 0; a < n; ++a) {
                const Rational v = algebra.f(a, b, c);
                if (v != 0)
                    entries.push_back({b + 1, c + 1, a + 1, rational_str(v)});
            }
    j["f"] = std::move(entries);
    return j;
}

nlohmann::ordered_json nlie_to_json(const NLieAlgebra& algebra) {
    ordered_json j;
    const std::size_t n = algebra.dim();
    const std::size_t arity = algebra.arity();
    j["arity"] = arity;
    j["dim"] = n;
    ordered_json entries = ordered_json::array();
    std::vector<std::size_t> lower(arity);
    for (std::size_t i = 0; i < arity; ++i) lower[i] = i;
    if (arity <= n) {
        bool more = true;
        while (more) {
            for (std::size_t a = 0; a < n; ++a) {
                std::vector<std::size_t> full{a};
                full.insert(full.end(), lower.begin(), lower.end());
                const Rational& v = algebra.constants().at(full);
                if (v != 0) {
                    ordered_json e = ordered_json::array();
                    for (std::size_t i : full) e.push_back(i + 1);
                    e.push_back(rational_str(v));
                    entries.push_back(std::move(e));
                }
            }
            more = false;
            for (std::size_t i = arity; i-- > 0;) {
                if (lower[i] < n - (arity - i)) {
                    ++lower[i];
                    for (std::size_t l = i + 1; l < arity; ++l) lower[l] = lower[l - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    j["k"] = std::move(entries);
    return j;
}

Cochain make_omega(std::shared_ptr<const LieAlgebra> parent,
                   const std::string& selector) {
    if (selector == "trace") return Cochain::trace(parent);
    if (selector.rfind("dual:", 0) == 0)
        return Cochain::dual_basis(parent, parent->label_index(selector.substr(5)));
    if (selector.rfind("custom:", 0) == 0)
        return load_cochain(selector.substr(7), parent);
    // sum of basis labels, e.g. "x+z"
    Cochain w(parent, 1);
    std::stringstream ss(selector);
    std::string label;
    bool any = false;
    while (std::getline(ss, label, '+')) {
        if (label.empty()) throw ConfigError("bad omega selector '" + selector + "'");
        w.add_term({parent->label_index(label)}, 1);
        any = true;
    }
    if (!any) throw ConfigError("bad omega selector '" + selector + "'");
    return w;
}

nlohmann::ordered_json report_to_json(const CheckReport& report) {
    ordered_json j;
    j["check"] = report.check;
    j["passed"] = report.passed();
    j["notes"] = report.notes;
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json jv;
        ordered_json idx = ordered_json::array();
        for (std::size_t i : v.indices) idx.push_back(i + 1);
        jv["indices"] = std::move(idx);
        jv["residual"] = v.residual;
        violations.push_back(std::move(jv));
    }
    j["violations"] = std::move(violations);
    return j;
}

nlohmann::ordered_json report_to_json(const Theorem1Report& report) {
    ordered_json j;
    j["omega_condition"] = report_to_json(report.omega_condition);
    j["filippov"] = report_to_json(report.filippov);
    j["agree"] = report.agree;
    return j;
}

nlohmann::ordered_json report_to_json(const BRSRelationsReport& report) {
    ordered_json j;
    j["d_squared"] = report_to_json(report.d_squared);
    j["delta_squared"] = report_to_json(report.delta_squared);
    j["total_squared"] = report_to_json(report.total_squared);
    j["anticommutator"] = report_to_json(report.anticommutator);
    j["d_degree"] = report_to_json(report.d_degree);
    j["delta_degree"] = report_to_json(report.delta_degree);
    j["passed"] = report.passed();
    return j;
}

nlohmann::ordered_json report_to_json(const AuditReport& report) {
    ordered_json j;
    j["notes"] = report.notes;
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json je;
        je["list"] = e.list;
        je["name"] = e.name;
        je["stated"] = e.stated;
        je["verdict"] = e.verdict;
        je["repair"] = e.repair;
        je["residuals"] = e.residuals;
        je["degree_consistent"] = e.degree_consistent;
        je["degree_note"] = e.degree_note;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["stated_nilpotent"] = report_to_json(report.stated_nilpotent);
    j["has_mismatch"] = report.has_mismatch();
    return j;
}

namespace {

void render_text(const nlohmann::ordered_json& j, std::string& out,
                 const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out += indent + key + ":\n";
                render_text(value, out, indent + "  ");
            } else {
                out += indent + key + ": " + (value.is_string()
                                                  ? value.get<std::string>()
                                                  : value.dump()) + "\n";
            }
        }
    } else if (j.is_array()) {
        if (j.empty()) out += indent + "(none)\n";
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out += indent + "-\n";
                render_text(value, out, indent + "  ");
            } else {
                out += indent + "- " + (value.is_string()
                                            ? value.get<std::string>()
                                            : value.dump()) + "\n";
            }
        }
    } else {
        out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

}  // namespace

std::string report_to_text(const nlohmann::ordered_json& report) {
    std::string out;
    render_text(report, out, "");
    return out;
}

nlohmann::ordered_json report_envelope(const std::string& command, bool passed,
                                       nlohmann::ordered_json body) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["passed"] = passed;
    j["report"] = std::move(body);
    return j;
}

}  // namespace nambu
