#pragma once

#include <compare>

#include "bstab/lattice.hpp"

namespace bstab {

/// A rational slope or +infinity.
class ExtendedSlope {
 public:
  static ExtendedSlope infinity() { return ExtendedSlope(); }
  static ExtendedSlope finite(Rational value) { return ExtendedSlope(std::move(value)); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  std::strong_ordering operator<=>(const ExtendedSlope& o) const;
  bool operator==(const ExtendedSlope& o) const { return (*this <=> o) == 0; }

 private:
  ExtendedSlope() : infinite_(true) {}
  explicit ExtendedSlope(Rational v) : infinite_(false), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

/// mu = ch1.f*w / ch0 (surface) or ch1.(f*w)^2 / ch0 (3-fold); +inf when ch0 = 0.
ExtendedSlope mu(const ContractionModel& model, const ChernVector& v);

/// Tilt slope on a 3-fold. When the denominator ch1.(f*w)^2 vanishes the slope
/// is +inf and the numerator Im Z is still reported.
struct TiltSlope {
  ExtendedSlope slope;
  Rational numerator;    ///< Im Z_{bD, f*w}
  Rational denominator;  ///< ch1.(f*w)^2
};

TiltSlope nu(const ContractionModel& model, const Rational& b, const ChernVector& v);

enum class Trichotomy { CaseA, CaseB, CaseC, Violation };

/// A: ch1.(f*w)^2 > 0; B: it vanishes and Im Z > 0; C: both vanish and Re Z < 0.
/// Violation marks a class that cannot belong to a nonzero object of the tilted heart.
Trichotomy trichotomy(const ContractionModel& model, const Rational& b, const ChernVector& v);

const char* to_string(Trichotomy t);

}  // namespace bstab
