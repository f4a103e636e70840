#pragma once

#include <json.hpp>

#include "qpi/identities.hpp"

namespace qpi {

/* Stable JSON shape for one verification:
 * {
 *   "id": "thm-3.2",
 *   "kind": "theorem" | "conjecture",
 *   "order": 20,
 *   "status": "MATCH" | "MISMATCH" | "CONJECTURE-MATCH" | "CONJECTURE-FAIL",
 *   "first_divergent_exponent": 7 | null,
 *   "sides": [ { "tag": "...", "coeffs": ["1", "-2", ...] }, ... ],
 *   "ms": 1.25
 * }
 * Coefficients are strings: plain decimal when z-free, otherwise the
 * canonical Laurent form such as "2*z^2 - z". */
nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace qpi
