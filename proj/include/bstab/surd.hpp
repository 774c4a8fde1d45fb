#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bstab/rational.hpp"

namespace bstab {

/// Exact real number p + q sqrt(d) with p, q rational and d a squarefree
/// positive integer. Rational values are stored with q = 0, d = 1.
///
/// Comparison is exact for any two values, including values over different
/// square roots. Arithmetic requires a common square root (or a rational
/// operand) and throws Error(InvalidArgument) otherwise.
class QuadExtNumber {
 public:
  QuadExtNumber() : QuadExtNumber(Rational(0)) {}
  QuadExtNumber(Rational p);  // NOLINT(google-explicit-constructor): rationals embed
  QuadExtNumber(Rational p, Rational q, Integer d);

  /// sqrt(r) for r >= 0.
  static QuadExtNumber sqrt_of(const Rational& r);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  int sign() const;
  Integer floor() const;
  QuadExtNumber reciprocal() const;

  /// Non-authoritative decimal rendering with the given number of significant digits.
  std::string approx(int significant_digits = 12) const;
  double to_double() const;

  /// "p + q*sqrt(d)" style rendering for humans, e.g. "7/6 - 1/6*sqrt(13)".
  std::string to_string() const;

  friend QuadExtNumber operator+(const QuadExtNumber& a, const QuadExtNumber& b);
  friend QuadExtNumber operator-(const QuadExtNumber& a, const QuadExtNumber& b);
  friend QuadExtNumber operator*(const QuadExtNumber& a, const QuadExtNumber& b);
  friend QuadExtNumber operator-(const QuadExtNumber& a) { return QuadExtNumber(-a.p_, -a.q_, a.d_); }

  friend std::strong_ordering operator<=>(const QuadExtNumber& a, const QuadExtNumber& b);
  friend bool operator==(const QuadExtNumber& a, const QuadExtNumber& b) { return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_; }

 private:
  Rational p_;
  Rational q_;
  Integer d_;
};

inline int sign(const QuadExtNumber& x) { return x.sign(); }

/// Exact sign of a + b sqrt(m) + c sqrt(n) for squarefree m, n >= 1.
int sign_of_sum(const Rational& a, const Rational& b, const Integer& m, const Rational& c, const Integer& n);

/// Squarefree decomposition n = s^2 * core for n > 0; returns {s, core}.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

/// Endpoint of an open interval: a finite surd or -/+ infinity.
struct Bound {
  enum class Type { NegInf, Finite, PosInf };
  Type type = Type::Finite;
  QuadExtNumber value;

  static Bound neg_inf() { return {Type::NegInf, {}}; }
  static Bound pos_inf() { return {Type::PosInf, {}}; }
  static Bound at(QuadExtNumber v) { return {Type::Finite, std::move(v)}; }
  bool is_finite() const { return type == Type::Finite; }

  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);
  friend bool operator==(const Bound& a, const Bound& b) { return (a <=> b) == 0; }
};

/// Open interval (lo, hi).
struct Interval {
  Bound lo;
  Bound hi;
  bool empty() const { return !(lo < hi); }
  bool contains(const QuadExtNumber& x) const;
  bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint, sorted, nonempty open intervals.
class BRange {
 public:
  BRange() = default;
  explicit BRange(std::vector<Interval> intervals);  ///< normalizes (drops empties, sorts)
  static BRange all() { return BRange({Interval{Bound::neg_inf(), Bound::pos_inf()}}); }
  static BRange none() { return BRange(); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool contains(const QuadExtNumber& x) const;

  BRange intersect(const BRange& o) const;
  bool operator==(const BRange&) const = default;

  /// Simplest rational (smallest denominator, then smallest absolute value)
  /// inside the given interval of this range. Throws on an out-of-range index.
  Rational simplest_rational(std::size_t interval_index = 0) const;

 private:
  std::vector<Interval> intervals_;
};

/// Simplest rational strictly inside (lo, hi); lo < hi required.
Rational simplest_rational_between(const Bound& lo, const Bound& hi);

/// q(b) = q2 b^2 + q1 b + q0.
struct QuadPoly {
  Rational q2;
  Rational q1;
  Rational q0;

  Rational operator()(const Rational& b) const { return (q2 * b + q1) * b + q0; }
  QuadExtNumber operator()(const QuadExtNumber& b) const;
  /// The same polynomial in the variable c = shift - b, i.e. r(c) = q(shift - c).
  QuadPoly reflected(const Rational& shift) const;
  /// Real roots in increasing order (none, one, or two; linear polynomials have at most one).
  std::vector<QuadExtNumber> real_roots() const;
  /// {b : q(b) > 0} as an exact union of open intervals.
  BRange positivity_set() const;
  bool operator==(const QuadPoly&) const = default;
};

}  // namespace bstab
