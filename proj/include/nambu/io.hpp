#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "nambu/brs.hpp"
#include "nambu/cochain.hpp"
#include "nambu/lie.hpp"
#include "nambu/nlie.hpp"
#include "nambu/report.hpp"
#include "nambu/weil.hpp"

namespace nambu {

// Input schema (all indices 1-based, rationals as strings "p/q" or "p"):
//   Lie algebra: {"dim": n, "basis": [labels]?, "f": [[b, c, a, "p/q"], ...]}
//     with entries listed for b < c only (the c < b half is implied), unless
//     auto_antisymmetrize is set, in which case arbitrary entries are read
//     and the (b,c) axes are antisymmetrized.
//   Cochain: {"degree": k, "entries": [[[i1, ..., ik], "p/q"], ...]}
//   n-bracket: {"arity": n, "dim": m, "k": [[a, b1, ..., bn, "p/q"], ...]}
//     with b1 < ... < bn; the full antisymmetric orbit is implied.
std::shared_ptr<const LieAlgebra> load_algebra(const std::string& path,
                                               bool auto_antisymmetrize = false);
Cochain load_cochain(const std::string& path,
                     std::shared_ptr<const LieAlgebra> parent);
NLieAlgebra load_nlie(const std::string& path);

nlohmann::ordered_json algebra_to_json(const LieAlgebra& algebra);
nlohmann::ordered_json nlie_to_json(const NLieAlgebra& algebra);

// Omega selectors: "trace" (matrix-realized algebras), "dual:LABEL",
// "custom:PATH" (cochain file), or a sum of basis labels like "x+z".
Cochain make_omega(std::shared_ptr<const LieAlgebra> parent,
                   const std::string& selector);

// Report serialization. Violation indices are rendered 1-based to match the
// input schema. JSON is the stable contract; text is best-effort.
nlohmann::ordered_json report_to_json(const CheckReport& report);
nlohmann::ordered_json report_to_json(const Theorem1Report& report);
nlohmann::ordered_json report_to_json(const BRSRelationsReport& report);
nlohmann::ordered_json report_to_json(const AuditReport& report);

std::string report_to_text(const nlohmann::ordered_json& report);

// Wraps a report body into the versioned envelope written by the CLI.
nlohmann::ordered_json report_envelope(const std::string& command,
                                       bool passed, nlohmann::ordered_json body);

}  // namespace nambu
