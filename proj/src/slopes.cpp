#include "bstab/slopes.hpp"

#include "bstab/charges.hpp"
#include "bstab/error.hpp"

namespace bstab {

std::strong_ordering ExtendedSlope::operator<=>(const ExtendedSlope& o) const {
  if (infinite_ || o.infinite_) return static_cast<int>(infinite_) <=> static_cast<int>(o.infinite_);
  const int c = cmp(value_, o.value_);
  return c <=> 0;
}

namespace {

Rational degree_against_polarization(const ContractionModel& model, const ChernVector& v) {
  const DivisorClass fw = model.fstar_omega();
  const DivisorClass ch1{v.ch1};
  if (model.dimension() == 2) return model.intersect(ch1, fw);
  return model.pair_curve_divisor(ch1, model.divisor_product(fw, fw));
}

}  // namespace

ExtendedSlope mu(const ContractionModel& model, const ChernVector& v) {
  model.check(v);
  if (v.ch0 < 0) fail(ErrorCode::Precondition, "precondition violated: mu needs ch0 >= 0 (got " + to_string(v.ch0) + ")");
  if (v.ch0 == 0) return ExtendedSlope::infinity();
  return ExtendedSlope::finite(degree_against_polarization(model, v) / v.ch0);
}

TiltSlope nu(const ContractionModel& model, const Rational& b, const ChernVector& v) {
  const ChargeValue z = z_threefold(model, b, v);
  const Rational den = degree_against_polarization(model, v);
  if (den < 0) fail(ErrorCode::Precondition, "precondition violated: nu needs ch1.(f*w)^2 >= 0 (got " + to_string(den) + ")");
  if (den == 0) return {ExtendedSlope::infinity(), z.im, den};
  return {ExtendedSlope::finite(z.im / den), z.im, den};
}

Trichotomy trichotomy(const ContractionModel& model, const Rational& b, const ChernVector& v) {
  const ChargeValue z = z_threefold(model, b, v);
  const int deg = sign(degree_against_polarization(model, v));
  if (deg > 0) return Trichotomy::CaseA;
  if (deg == 0 && z.im > 0) return Trichotomy::CaseB;
  if (deg == 0 && z.im == 0 && z.re < 0) return Trichotomy::CaseC;
  return Trichotomy::Violation;
}

const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::CaseA: return "CaseA";
    case Trichotomy::CaseB: return "CaseB";
    case Trichotomy::CaseC: return "CaseC";
    case Trichotomy::Violation: return "Violation";
  }
  return "?";
}

}  // namespace bstab
