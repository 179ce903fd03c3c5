#include "hdepth/json_io.hpp"

#include <stdexcept>

namespace hdepth {

namespace {

std::int64_t get_int(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<std::int64_t>();
}

}  // namespace

nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"offset", p.offset()}, {"coeffs", std::move(coeffs)}};
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  const std::int64_t offset = get_int(j, "offset");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw std::invalid_argument("expected array field 'coeffs'");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad decimal coefficient " + c.dump());
      coeffs.push_back(std::move(v));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw std::invalid_argument("coefficient must be a decimal string: " + c.dump());
    }
  }
  return LaurentPolynomial(offset, std::move(coeffs));
}

nlohmann::json to_json(const HilbertDecomposition& dec) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& part : dec.parts) parts.push_back({{"level", part.level}, {"numerator", to_json(part.numerator)}});
  return {{"hdepth", dec.min_level}, {"parts", std::move(parts)}};
}

HilbertDecomposition decomposition_from_json(const nlohmann::json& j) {
  HilbertDecomposition dec;
  dec.min_level = get_int(j, "hdepth");
  if (!j.contains("parts") || !j.at("parts").is_array()) throw std::invalid_argument("expected array field 'parts'");
  for (const auto& part : j.at("parts")) {
    if (!part.contains("numerator")) throw std::invalid_argument("part without 'numerator'");
    dec.parts.push_back({get_int(part, "level"), laurent_from_json(part.at("numerator"))});
  }
  return dec;
}

nlohmann::json to_json(const PositivityCertificate& cert) {
  if (cert.is_positive()) return {{"verdict", "Positive"}, {"tailBound", cert.tail_bound()}};
  return {{"verdict", "NegativeAt"}, {"witnessDegree", cert.witness_degree()}, {"witnessValue", cert.witness_value().get_str()}};
}

}  // namespace hdepth
