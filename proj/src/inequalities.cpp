#include "bstab/inequalities.hpp"

#include <algorithm>

#include "bstab/charges.hpp"
#include "bstab/chern.hpp"
#include "bstab/error.hpp"

namespace bstab {

namespace {

BGReport report(Rational margin) {
  const bool holds = margin >= 0;
  return {std::move(margin), holds};
}

void require_surface(const ContractionModel& model, const char* op) {
  if (!is_surface(model.kind())) fail(ErrorCode::Precondition, std::string("precondition violated: ") + op + " needs a surface model");
}

}  // namespace

BGReport bg_discriminant(const ContractionModel& model, const ChernVector& v) {
  model.check(v);
  const DivisorClass ch1{v.ch1};
  if (model.dimension() == 2) return report(model.intersect(ch1, ch1) - 2 * v.ch0 * v.top());
  const DivisorClass fw = model.fstar_omega();
  return report(model.triple(ch1, ch1, fw) - 2 * v.ch0 * model.pair_curve_divisor(fw, CurveClass{v.ch2}));
}

BGReport bg_weak_surface(const ContractionModel& model, const ChernVector& v) {
  require_surface(model, "bg_weak_surface");
  model.check(v);
  const Rational deg = model.intersect(DivisorClass{v.ch1}, model.fstar_omega());
  return report(deg * deg - 2 * model.w() * v.ch0 * v.top());
}

BGReport bg_strong_margin(const ContractionModel& model, const ChernVector& v, const Rational& c_omega,
                          const Rational& threshold) {
  require_surface(model, "bg_strong_margin");
  if (threshold != 0 && threshold != -1) {
    fail(ErrorCode::Precondition, "precondition violated: strong BG threshold must be 0 or -1 (got " + to_string(threshold) + ")");
  }
  model.check(v);
  const DivisorClass ch1{v.ch1};
  const Rational deg = model.intersect(ch1, model.fstar_omega());
  return report(model.intersect(ch1, ch1) - 2 * v.ch0 * v.top() + c_omega * deg * deg / model.w() - threshold);
}

BGReport bg_threefold_margin(const ContractionModel& model, const Rational& b, const ChernVector& v) {
  if (!is_threefold(model.kind())) fail(ErrorCode::Precondition, "precondition violated: bg_threefold_margin needs a 3-fold model");
  model.check(v);
  if (v.ch0 <= 0) fail(ErrorCode::Precondition, "precondition violated: bg_threefold_margin needs ch0 > 0 (got " + to_string(v.ch0) + ")");
  const DivisorClass fw = model.fstar_omega();
  const Rational deg = model.pair_curve_divisor(DivisorClass{v.ch1}, model.divisor_product(fw, fw));
  const ChernVector t = twist(model, v, b);
  return report(deg * deg - 2 * model.w() * v.ch0 * model.pair_curve_divisor(fw, CurveClass{t.ch2}));
}

Rational support_norm(const ContractionModel& model, const ChernVector& v) {
  require_surface(model, "support_norm");
  model.check(v);
  const Rational r = abs(v.ch0);
  const Rational n = abs(v.top());
  const Rational plus = abs(v.ch1[0] * model.w());  // beta+ . f*w = x w
  const Rational minus = abs(v.ch1[1]);             // sqrt(-(aC)^2) = |a|
  return std::max({r, n, plus, minus});
}

Rational support_ratio_sq(const ContractionModel& model, const ChernVector& v) {
  const ChargeValue z = z_surface(model, v);
  const Rational mod2 = z.re * z.re + z.im * z.im;
  if (mod2 == 0) fail(ErrorCode::Precondition, "precondition violated: support ratio needs a nonzero central charge");
  const Rational norm = support_norm(model, v);
  return norm * norm / mod2;
}

}  // namespace bstab
