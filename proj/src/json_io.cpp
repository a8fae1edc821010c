#include "poplab/json_io.hpp"

#include <sstream>

namespace poplab {

nlohmann::json multipoly_to_json(const MultiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json term;
    term["e"] = m.e;
    term["c"] = c.str();
    out.push_back(std::move(term));
  }
  return out;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  MultiPoly out;
  for (const auto& term : j) {
    Monomial m;
    const auto& e = term.at("e");
    if (e.size() != static_cast<size_t>(kNumVars))
      throw std::invalid_argument("exponent vector must have six entries");
    for (int i = 0; i < kNumVars; ++i) m.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)].get<uint16_t>();
    out.add_term(m, BigInt(term.at("c").get<std::string>()));
  }
  return out;
}

nlohmann::json xseries_to_json(const XSeries& s) {
  nlohmann::json out;
  out["order"] = s.order();
  out["coeffs"] = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n) out["coeffs"].push_back(multipoly_to_json(s.coeff(n)));
  return out;
}

XSeries xseries_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  XSeries s(order);
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw std::invalid_argument("coefficient count does not match order");
  for (int n = 0; n <= order; ++n) s.coeff(n) = multipoly_from_json(coeffs[static_cast<size_t>(n)]);
  return s;
}

nlohmann::json sequence_to_json(const std::vector<BigInt>& seq) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : seq) out.push_back(v.str());
  return out;
}

std::vector<BigInt> sequence_from_json(const nlohmann::json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.emplace_back(v.get<std::string>());
  return out;
}

std::string sequence_to_csv(const std::vector<BigInt>& seq) {
  std::ostringstream out;
  out << "n,value\n";
  for (size_t i = 0; i < seq.size(); ++i) out << i << "," << seq[i].str() << "\n";
  return out.str();
}

}  // namespace poplab
