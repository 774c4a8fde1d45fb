// Shared helpers for the unit tests: literal constructors, random classes,
// and the test-owned oracles that recompute library results by other means.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "bstab/catalog.hpp"
#include "bstab/chern.hpp"
#include "bstab/lattice.hpp"

namespace testing_support {

using bstab::ChernVector;
using bstab::ContractionKind;
using bstab::ContractionModel;
using bstab::Coords;
using bstab::Rational;

inline Rational Q(const std::string& text) { return bstab::parse_rational(text); }
inline Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline ContractionModel model(ContractionKind k, const Rational& w = 1) { return ContractionModel::make(k, w); }

inline const bstab::SimpleClass& find_simple(const std::vector<bstab::SimpleClass>& catalog, const std::string& name) {
  for (const auto& s : catalog)
    if (s.name == name) return s;
  throw std::runtime_error("no simple named " + name);
}

// Small random rationals with numerators in [-range, range] and denominators in [1, den].
class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed, long range = 9, long den = 6) : gen_(seed), num_(-range, range), den_(1, den) {}
  Rational next() {
    Rational r(num_(gen_), den_(gen_));
    r.canonicalize();
    return r;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

inline ChernVector random_class(const ContractionModel& m, RandomRationals& rng) {
  ChernVector v = m.zero();
  v.ch0 = rng.next();
  for (auto& c : v.ch1) c = rng.next();
  for (auto& c : v.ch2) c = rng.next();
  if (m.dimension() == 3) v.ch3 = rng.next();
  return v;
}

// Surface class with integral ch1 coordinates, as used by the identity checks.
inline ChernVector random_surface_class(const ContractionModel& m, RandomRationals& rng) {
  return m.surface_class(rng.integer(-5, 5), rng.integer(-5, 5), rng.integer(-5, 5), Q(rng.integer(-12, 12), 2));
}

// ---------------------------------------------------------------------------
// Twist oracle: exp(-bD) v as a power series, using only the model's ring
// multiplication by D (never the closed-form twist).

inline ChernVector multiply_by_d(const ContractionModel& m, const ChernVector& v) {
  const bstab::DivisorClass d = m.exceptional_divisor();
  ChernVector out = m.zero();
  out.ch1 = bstab::scale(v.ch0, d.coords);
  out.ch2 = m.divisor_product(d, bstab::DivisorClass{v.ch1}).coords;
  out.ch3 = m.pair_curve_divisor(d, bstab::CurveClass{v.ch2});
  return out;
}

inline ChernVector series_twist(const ContractionModel& m, const ChernVector& v, const Rational& b) {
  ChernVector acc = v;
  ChernVector term = v;
  for (int k = 1; k <= 3; ++k) {
    term = multiply_by_d(m, term).scaled(Rational(-b / k));
    acc += term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// GRR oracle on a smooth exceptional divisor D (P^2 or P^1 x P^1): a small
// graded ring A^0 + A^1 + A^2 with its own intersection form, the exponential
// and inverse Todd series computed term by term, and the pushforward to X
// given by a hand-written table.

struct RingElement {
  Rational r;
  Coords c1;
  Rational top;
};

struct SurfaceRing {
  std::vector<Coords> form;
  std::vector<Coords> push;  // i_* of each generator in the 3-fold curve basis

  std::size_t rank() const { return form.size(); }
  Rational dot(const Coords& a, const Coords& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * form[i][j] * b[j];
    return s;
  }
  RingElement one() const { return {1, bstab::zeros(rank()), 0}; }
  RingElement divisor(const Coords& c) const { return {0, c, 0}; }
  RingElement mul(const RingElement& a, const RingElement& b) const {
    return {a.r * b.r, bstab::add(bstab::scale(a.r, b.c1), bstab::scale(b.r, a.c1)), a.r * b.top + b.r * a.top + dot(a.c1, b.c1)};
  }
  RingElement add(const RingElement& a, const RingElement& b) const {
    return {a.r + b.r, bstab::add(a.c1, b.c1), a.top + b.top};
  }
  RingElement scaled(const RingElement& a, const Rational& s) const { return {a.r * s, bstab::scale(s, a.c1), a.top * s}; }
  // sum_k coeff(k) x^k for k = 0..2
  template <class F>
  RingElement series(const Coords& x, F coeff) const {
    RingElement out = one();
    out = scaled(out, coeff(0));
    RingElement power = one();
    for (int k = 1; k <= 2; ++k) {
      power = mul(power, divisor(x));
      out = add(out, scaled(power, coeff(k)));
    }
    return out;
  }
  RingElement exp(const Coords& x) const {
    return series(x, [](int k) { return Rational(1, k == 0 ? 1 : (k == 1 ? 1 : 2)); });
  }
  // td(L)^{-1} = (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
  RingElement todd_inverse(const Coords& x) const {
    return series(x, [](int k) {
      long fact = 1;
      for (int i = 2; i <= k + 1; ++i) fact *= i;
      return Rational(k % 2 == 0 ? 1 : -1, fact);
    });
  }
  ChernVector push_forward(const ContractionModel& m, const RingElement& e) const {
    ChernVector out = m.zero();
    out.ch1 = {0, e.r};
    for (std::size_t i = 0; i < rank(); ++i) out.ch2 = bstab::add(out.ch2, bstab::scale(e.c1[i], push[i]));
    out.ch3 = e.top;
    return out;
  }
};

// The divisor data for the smooth point contractions, written out independently.
struct SmoothDivisor {
  SurfaceRing ring;
  Coords normal;  // c1(O_D(D))
};

inline SmoothDivisor smooth_divisor(ContractionKind k) {
  switch (k) {
    case ContractionKind::TII: return {{{{1}}, {{1, 0}}}, {-1}};
    case ContractionKind::TIII: return {{{{0, 1}, {1, 0}}, {{1, 0, 0}, {0, 1, 0}}}, {-1, -1}};
    case ContractionKind::TIV: return {{{{1}}, {{1, 0}}}, {-2}};
    default: throw std::runtime_error("not a smooth point contraction");
  }
}

inline ChernVector oracle_push(const ContractionModel& m, const RingElement& ch) {
  const SmoothDivisor d = smooth_divisor(m.kind());
  return d.ring.push_forward(m, d.ring.mul(ch, d.ring.todd_inverse(d.normal)));
}

}  // namespace testing_support
