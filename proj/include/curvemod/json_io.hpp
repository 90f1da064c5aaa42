#pragma once
// JSON wire format for every public value type. Shapes are documented in
// schemas/*.json; integers that fit in 53 bits are emitted as JSON numbers,
// anything wider as decimal strings, so consumers never lose precision.

#include <json.hpp>

#include "curvemod/algebra.hpp"
#include "curvemod/betti.hpp"
#include "curvemod/divisor.hpp"
#include "curvemod/hilbert.hpp"
#include "curvemod/resolution.hpp"
#include "curvemod/series.hpp"

namespace curvemod {

using Json = nlohmann::ordered_json;

Json to_json(const Int& value);

Json to_json(const IntSeries& series);   // {"offset","coeffs","trunc_order"}
IntSeries series_from_json(const Json& j);

Json to_json(const BettiPair& betti);    // {"a":[[deg,count],...],"b":[...]}
BettiPair betti_from_json(const Json& j);

Json to_json(const SPoly& s);            // [s_0, s_1, ...]
SPoly spoly_from_json(const Json& j);

Json to_json(const ShapeGrid& grid);     // {"rows","cols","cells"}

Json to_json(const FormalDivisor& d);    // [[x,y,mult],...] lexicographic
FormalDivisor divisor_from_json(const Json& j);

Json to_json(const TableBlock& block);   // {"kind","epsilon","rows":[...]}
Json tables_to_json(const std::vector<TableBlock>& blocks);

// Parse helpers shared by the CLI. Both throw InvalidArgument with a
// human-readable message on malformed input.
//
// Coefficient list "3,2,1" -> SPoly; "0" and "" mean zero.
SPoly parse_s_coeffs(const std::string& text);
// Betti JSON text (same shape as to_json) -> pair.
BettiPair parse_betti_text(const std::string& text);

}  // namespace curvemod
