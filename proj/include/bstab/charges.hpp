#pragma once

#include "bstab/error.hpp"
#include "bstab/lattice.hpp"

namespace bstab {

struct ChargeValue {
  Rational re;
  Rational im;
  bool operator==(const ChargeValue&) const = default;
};

/// Z(v) = (-ch2 + w/2 ch0) + i ch1.f*w on a surface.
ChargeValue z_surface(const ContractionModel& model, const ChernVector& v);

/// Z_{bD, f*w}(v) = (-ch3^B + (f*w)^2.ch1/2) + i (f*w.ch2^B - w/6 ch0) on a 3-fold.
ChargeValue z_threefold(const ContractionModel& model, const Rational& b, const ChernVector& v);

enum class PhaseOrder { Less, Equal, Greater };

constexpr PhaseOrder reverse(PhaseOrder o) {
  return o == PhaseOrder::Less ? PhaseOrder::Greater : (o == PhaseOrder::Greater ? PhaseOrder::Less : o);
}

/// Exact phase of a nonzero charge in (0, 2], kept as a half-plane index and
/// the charge itself. Works for any ordered field element type T with a free
/// function sign(const T&) and ring operations.
template <class T>
class BasicPhaseKey {
 public:
  BasicPhaseKey(T re, T im) : re_(std::move(re)), im_(std::move(im)) {
    const int si = sign(im_), sr = sign(re_);
    if (si == 0 && sr == 0) fail(ErrorCode::Precondition, "precondition violated: phase of a zero charge is undefined");
    // Upper half: phase in (0, 1]; lower half: phase in (1, 2].
    upper_ = si > 0 || (si == 0 && sr < 0);
  }

  /// 0 for phases in (0, 1], 1 for phases in (1, 2].
  int half() const { return upper_ ? 0 : 1; }

  PhaseOrder compare(const BasicPhaseKey& o) const {
    if (upper_ != o.upper_) return upper_ ? PhaseOrder::Less : PhaseOrder::Greater;
    // Both in one half-open half-plane: angles differ by less than pi.
    const int cross = sign(T(re_ * o.im_ - im_ * o.re_));
    if (cross > 0) return PhaseOrder::Less;
    if (cross < 0) return PhaseOrder::Greater;
    return PhaseOrder::Equal;
  }

  const T& re() const { return re_; }
  const T& im() const { return im_; }

 private:
  T re_;
  T im_;
  bool upper_ = true;
};

using PhaseKey = BasicPhaseKey<Rational>;

/// Compares continuous phases in (0, 2]; throws Error(Precondition) on a zero charge.
PhaseOrder compare_phase(const ChargeValue& z1, const ChargeValue& z2);

}  // namespace bstab
