#pragma once

#include <string>

#include "json.hpp"

#include "toral/bf.hpp"
#include "toral/ideals.hpp"
#include "toral/tower.hpp"

namespace toral {

using nlohmann::json;

// Matrix text format: first line n, then n lines of n integers.
// Matrix JSON format: {"n": <int>, "rows": [[...], ...]}. Both reject
// non-square or ragged input.
IntMatrix parse_matrix_text(const std::string& text);
IntMatrix parse_matrix_json(const json& j);
IntMatrix load_matrix(const std::string& path); // sniffs the format
std::string matrix_text(const IntMatrix& M);

// Polynomials: ascending coefficient list "1 -3 1", or surface syntax
// behind a "poly:" prefix, e.g. "poly:t^2-3t+1".
PolyZ parse_poly(const std::string& text);

// Divisor chain "1,2,4".
DivisorChain parse_chain(const std::string& text);

json matrix_json(const IntMatrix& M);
json factors_json(const InvariantFactors& f);
json bf_group_json(const BFGroup& G);
json points_json(const PeriodicPoints& pts);
json strong_bf_json(const StrongBFReport& rep);
json ideal_json(const FractionalIdeal& I);
json order_element_json(const OrderElement& x);
json ideal_verdict_json(const IdealVerdict& v);
json chain_report_json(const ChainReport& rep);
json tower_json(const Tower& T);
json cofinality_json(const CofinalityReport& rep);
json truncated_conjugacy_json(const TruncatedConjugacy& tc);

} // namespace toral
