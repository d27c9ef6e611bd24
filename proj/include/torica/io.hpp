#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "torica/adjunction.hpp"
#include "torica/bogomolov.hpp"
#include "torica/chern_bounds.hpp"
#include "torica/divisor.hpp"
#include "torica/enumeration.hpp"
#include "torica/fan.hpp"

namespace torica::io {

using json = nlohmann::ordered_json;

/// Integers small enough for a double round trip are numbers, larger ones strings.
json to_json(const Integer& v);
json to_json(const IntegerVector& v);
/// Rationals as "p/q" strings (or integers when the denominator is one).
json to_json(const Rational& q);
Integer integer_from_json(const json& j);
IntegerVector integers_from_json(const json& j);

/// {"rays": [[x, y], ...]} or {"profile": [d_0, ...]}. Throws ParseError
/// for malformed documents and the fan_core errors for invalid fans.
Fan fan_from_json(const json& j);
json fan_to_json(const Fan& fan);

struct DivisorInput {
  DivisorClass divisor;
  bool given_as_degrees = false;
};

/// {"coefficients": [...]} or {"degrees": [...]} on the given fan.
DivisorInput divisor_from_json(const Fan& fan, const json& j);
json divisor_to_json(const DivisorClass& L);

json read_file(const std::string& path);
/// Writes `text` to `path`, or to stdout when the path is empty or "-".
void write_text(const std::string& path, const std::string& text);

json to_json(const BoundReport& r);
json to_json(const ClaimReport& r);
json to_json(const ReductionOutcome& o);
json to_json(const AdjunctionSequence& seq);
json to_json(const TelescopeReport& r);
json to_json(const DestabilizerSearch& search, const Integer& c2);
json to_json(const SurfaceInventory& inv);
json to_json(const VerificationReport& report);
json to_json(const CounterexampleRecord& rec);
json to_json(const CatalogueRow& row);
json to_json(const TwelveRayReport& r);
json to_json(const ExtremalInstance& x);

}  // namespace torica::io
