#pragma once

// JSON forms used by the command-line tool. Big integers travel as decimal
// strings so that no precision is lost beyond 2^53.
//
//   polynomial:     {"offset": int, "coeffs": ["decimal", ...]}
//   decomposition:  {"hdepth": int, "parts": [{"level": int, "numerator": polynomial}, ...]}

#include "hdepth/depth.hpp"

#include <json.hpp>

namespace hdepth {

nlohmann::json to_json(const LaurentPolynomial& p);
// Throws std::invalid_argument on schema violations.
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HilbertDecomposition& dec);
HilbertDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PositivityCertificate& cert);

}  // namespace hdepth
