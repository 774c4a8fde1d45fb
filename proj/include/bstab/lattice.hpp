#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bstab/rational.hpp"

namespace bstab {

/// The six built-in contraction geometries: the blow-down of a (-1)-curve on a
/// surface, and the five divisorial extremal contractions of a smooth 3-fold.
enum class ContractionKind { SurfaceBlowdown, TI, TII, TIII, TIV, TV };

inline constexpr ContractionKind kAllKinds[] = {ContractionKind::SurfaceBlowdown, ContractionKind::TI,
                                                ContractionKind::TII, ContractionKind::TIII,
                                                ContractionKind::TIV, ContractionKind::TV};

/// "surface", "TI", ..., "TV".
std::string_view to_string(ContractionKind kind);
/// Accepts the names produced by to_string plus "SurfaceBlowdown" and roman-numeral aliases ("I".."V").
ContractionKind parse_kind(std::string_view text);

constexpr bool is_surface(ContractionKind k) { return k == ContractionKind::SurfaceBlowdown; }
constexpr bool is_threefold(ContractionKind k) { return !is_surface(k); }
/// True when the exceptional divisor is contracted to a point (types II-V).
constexpr bool contracts_to_point(ContractionKind k) {
  return k == ContractionKind::TII || k == ContractionKind::TIII || k == ContractionKind::TIV || k == ContractionKind::TV;
}

/// Coordinates of a divisor class in the model's divisor basis {f*w, E}
/// where E is the exceptional curve C (surface) or divisor D (3-fold).
struct DivisorClass {
  Coords coords;
};

/// Coordinates of a curve class in the model's curve basis (3-folds only).
struct CurveClass {
  Coords coords;
};

/// Graded Chern character with exact coefficients.
///
/// Surfaces carry (ch0, ch1, ch2) with ch2 a single point-class coefficient
/// stored as a one-element vector; 3-folds carry (ch0, ch1, ch2, ch3) with ch2
/// in the curve basis.
struct ChernVector {
  int dim = 3;
  Rational ch0;
  Coords ch1;
  Coords ch2;
  Rational ch3;

  /// Top-degree component: ch2 for surfaces, ch3 for 3-folds.
  const Rational& top() const { return dim == 2 ? ch2.front() : ch3; }
  Rational& top() { return dim == 2 ? ch2.front() : ch3; }

  ChernVector& operator+=(const ChernVector& o);
  friend ChernVector operator+(ChernVector a, const ChernVector& b) { return a += b; }
  friend ChernVector operator-(const ChernVector& a) { return a.scaled(-1); }
  friend ChernVector operator-(ChernVector a, const ChernVector& b) { return a += -b; }
  ChernVector scaled(const Rational& s) const;
  bool operator==(const ChernVector& o) const;
};

/// Homological shift [n]: multiplies every component by (-1)^n.
ChernVector cv_shift(const ChernVector& v, long n);

/// Intersection-theoretic data of one contraction.
///
/// Divisor basis: {f*w, C} for surfaces, {f*w, D} for 3-folds. The 3-fold curve
/// basis lists the exceptional curve classes first, followed by auxiliary
/// non-contracted generators needed to close the ring: "(f*w)^2" in all
/// 3-fold cases and, for TI, the class "D^2" (whose pairings depend on the
/// blown-up curve and are therefore parameters).
class ContractionModel {
 public:
  /// Global data of the blown-up curve in type I; both default to 0.
  struct TypeIParams {
    Rational omega_dd{0};  ///< f*w . D^2  (= -deg of w on the blown-up curve)
    Rational d_cube{0};    ///< D^3
  };

  /// Throws Error(Precondition) unless w > 0.
  static ContractionModel make(ContractionKind kind, const Rational& w);
  static ContractionModel make_type_i(const Rational& w, const TypeIParams& params);

  ContractionKind kind() const { return kind_; }
  /// w^2 for surfaces, w^3 for 3-folds.
  const Rational& w() const { return w_; }
  int dimension() const { return is_surface(kind_) ? 2 : 3; }

  const std::vector<std::string>& divisor_labels() const { return divisor_labels_; }
  const std::vector<std::string>& curve_labels() const { return curve_labels_; }
  /// Number of leading curve labels that are contracted by f.
  std::size_t exceptional_curve_count() const { return exceptional_curves_; }

  DivisorClass fstar_omega() const;
  /// C for surfaces, D for 3-folds.
  DivisorClass exceptional_divisor() const;
  /// Basis curve class with the given index (3-folds).
  CurveClass curve(std::size_t index) const;
  std::size_t curve_index(std::string_view label) const;
  std::size_t divisor_index(std::string_view label) const;

  /// Surface intersection form on divisors.
  Rational intersect(const DivisorClass& a, const DivisorClass& b) const;
  /// 3-fold divisor . curve pairing, bilinear in both arguments.
  Rational pair_curve_divisor(const DivisorClass& d, const CurveClass& c) const;
  /// 3-fold product of two divisors as a curve class.
  CurveClass divisor_product(const DivisorClass& a, const DivisorClass& b) const;
  /// Triple intersection a.b.c on a 3-fold.
  Rational triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const;

  /// D^3 (3-folds) or C^2 (surfaces).
  Rational d_cube() const;
  /// D^2 as a curve class (3-folds).
  CurveClass dsq_curve() const;

  ChernVector zero() const;
  /// Class of a skyscraper sheaf away from the exceptional locus.
  ChernVector point_class() const;
  /// Surface constructor: ch1 = x f*w + a C.
  ChernVector surface_class(const Rational& ch0, const Rational& x, const Rational& a, const Rational& ch2) const;
  /// 3-fold constructor with ch1 = x f*w + y D.
  ChernVector threefold_class(const Rational& ch0, const Rational& x, const Rational& y, Coords ch2,
                              const Rational& ch3) const;

  /// Throws Error(InvalidArgument) when v's shape does not match this model.
  void check(const ChernVector& v) const;
  void check(const DivisorClass& d) const;
  void check(const CurveClass& c) const;

 private:
  ContractionModel() = default;

  ContractionKind kind_ = ContractionKind::SurfaceBlowdown;
  Rational w_;
  std::vector<std::string> divisor_labels_;
  std::vector<std::string> curve_labels_;
  std::size_t exceptional_curves_ = 0;
  // Surface: 2x2 intersection form.
  std::vector<Coords> form_;
  // 3-fold: pairing_[i][j] = divisor_i . curve_j ; product_[i][k] = divisor_i . divisor_k.
  std::vector<Coords> pairing_;
  std::vector<std::vector<CurveClass>> product_;
};

}  // namespace bstab
