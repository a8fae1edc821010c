#pragma once

#include <json.hpp>

#include "poplab/banded.hpp"
#include "poplab/multipoly.hpp"

namespace poplab {

// Canonical JSON forms. MultiPoly is a sorted list of
//   {"e": [e_p, e_q, e_u, e_v, e_s, e_t], "c": "<decimal string>"}
// and XSeries is {"order": N, "coeffs": [MultiPoly, ...]}. Sequences are
// arrays of decimal strings (values may exceed 64-bit range).
nlohmann::json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

nlohmann::json xseries_to_json(const XSeries& s);
XSeries xseries_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const std::vector<BigInt>& seq);
std::vector<BigInt> sequence_from_json(const nlohmann::json& j);

std::string sequence_to_csv(const std::vector<BigInt>& seq);

}  // namespace poplab
