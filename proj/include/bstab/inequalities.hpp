#pragma once

#include "bstab/lattice.hpp"

namespace bstab {

/// Margin of an inequality (LHS - RHS, minus any threshold); holds iff margin >= 0.
struct BGReport {
  Rational margin;
  bool holds = false;
};

/// ch1^2 - 2 ch0 ch2 on a surface; (ch1^2 - 2 ch0 ch2).f*w on a 3-fold.
BGReport bg_discriminant(const ContractionModel& model, const ChernVector& v);

/// (ch1.f*w)^2 - 2 w ch0 ch2 on a surface.
BGReport bg_weak_surface(const ContractionModel& model, const ChernVector& v);

/// ch1^2 - 2 ch0 ch2 + c_omega (ch1.f*w)^2 / w - threshold, threshold in {0, -1}.
BGReport bg_strong_margin(const ContractionModel& model, const ChernVector& v, const Rational& c_omega,
                          const Rational& threshold);

/// (ch1.(f*w)^2)^2 - 2 w ch0 (ch2^{bD}.f*w) on a 3-fold; requires ch0 > 0.
BGReport bg_threefold_margin(const ContractionModel& model, const Rational& b, const ChernVector& v);

/// max{|ch0|, |ch2|, |beta+ . f*w|, sqrt(-beta-^2)} with ch1 = beta+ + beta-,
/// beta+ in Q f*w and beta- in Q C. The square root is exact: -beta-^2 = a^2.
Rational support_norm(const ContractionModel& model, const ChernVector& v);

/// support_norm(v)^2 / |Z(v)|^2; throws Error(Precondition) when Z(v) = 0.
Rational support_ratio_sq(const ContractionModel& model, const ChernVector& v);

}  // namespace bstab
