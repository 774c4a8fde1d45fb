#pragma once

#include <string_view>

#include "json.hpp"

#include "bstab/catalog.hpp"
#include "bstab/charges.hpp"
#include "bstab/inequalities.hpp"
#include "bstab/sequiv.hpp"
#include "bstab/slopes.hpp"
#include "bstab/walls.hpp"

// JSON encodings. Rationals are always strings "p/q" (or "p"); objects use
// sorted keys so output is byte-stable.
namespace bstab::io {

using json = nlohmann::json;

json to_json(const Rational& r);
/// Accepts a string "p/q" or a JSON integer.
Rational rational_from_json(const json& j);

json to_json(const ContractionModel& model);

/// {"ch0": r, "ch1": {label: r}, "ch2": r | {label: r}, "ch3": r}; ch3 only on 3-folds.
json to_json(const ContractionModel& model, const ChernVector& v);

/// Inverse of to_json. Missing labels default to 0. Also accepts the compact
/// array form [ch0, [ch1...], ch2 | [ch2...], ch3].
ChernVector class_from_json(const ContractionModel& model, const json& j);

/// A class given as JSON text, a catalog simple name (its shifted class), or "point".
ChernVector parse_class(const ContractionModel& model, std::string_view text);

json to_json(const QuadExtNumber& x);
json to_json(const Bound& b);
json to_json(const BRange& r);
json to_json(const QuadPoly& q);
json to_json(const ContractionModel& model, const SimpleClass& s);
json to_json(const ChargeValue& z);
json to_json(const BGReport& r);
json to_json(const ExtendedSlope& s);
json to_json(const MultiplicityVector& m);
json to_json(const EpsPolynomial& p);
json to_json(const ContractionModel& model, const GrrTrace& trace);
json to_json(const RangeCrossCheck& check);

json parse_json(std::string_view text);

}  // namespace bstab::io
