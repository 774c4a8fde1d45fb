#include "bstab/charges.hpp"

#include "bstab/chern.hpp"

namespace bstab {

ChargeValue z_surface(const ContractionModel& model, const ChernVector& v) {
  if (!is_surface(model.kind())) fail(ErrorCode::Precondition, "precondition violated: z_surface needs a surface model");
  model.check(v);
  const DivisorClass ch1{v.ch1};
  return {-v.top() + model.w() / 2 * v.ch0, model.intersect(ch1, model.fstar_omega())};
}

ChargeValue z_threefold(const ContractionModel& model, const Rational& b, const ChernVector& v) {
  if (!is_threefold(model.kind())) fail(ErrorCode::Precondition, "precondition violated: z_threefold needs a 3-fold model");
  const ChernVector t = twist(model, v, b);
  const DivisorClass fw = model.fstar_omega();
  const CurveClass fw2 = model.divisor_product(fw, fw);
  const Rational re = -t.ch3 + model.pair_curve_divisor(DivisorClass{v.ch1}, fw2) / 2;
  const Rational im = model.pair_curve_divisor(fw, CurveClass{t.ch2}) - model.w() / 6 * v.ch0;
  return {re, im};
}

PhaseOrder compare_phase(const ChargeValue& z1, const ChargeValue& z2) {
  return PhaseKey(z1.re, z1.im).compare(PhaseKey(z2.re, z2.im));
}

}  // namespace bstab
