#include "bstab/surd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bstab/error.hpp"

namespace bstab {

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "squarefree_split needs a positive integer");
  Integer rest = n, square = 1, core = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= rest;
  return {square, core};
}

QuadExtNumber::QuadExtNumber(Rational p) : p_(std::move(p)), q_(0), d_(1) {}

QuadExtNumber::QuadExtNumber(Rational p, Rational q, Integer d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_ <= 0) fail(ErrorCode::InvalidArgument, "surd radicand must be positive");
  if (q_ == 0) {
    d_ = 1;
    return;
  }
  auto [s, core] = squarefree_split(d_);
  q_ *= s;
  d_ = core;
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
}

QuadExtNumber QuadExtNumber::sqrt_of(const Rational& r) {
  if (r < 0) fail(ErrorCode::InvalidArgument, "square root of a negative rational");
  if (r == 0) return QuadExtNumber(Rational(0));
  // sqrt(n/m) = sqrt(n m) / m
  const Integer& n = r.get_num();
  const Integer& m = r.get_den();
  return QuadExtNumber(0, Rational(1, 1) / Rational(m), n * m);
}

int sign_of_sum(const Rational& a, const Rational& b, const Integer& m, const Rational& c, const Integer& n) {
  if (m == n && c != 0) return sign_of_sum(a, b + c, m, 0, 1);
  // sign(x + y sqrt(r))
  const auto two_term = [](const Rational& x, const Rational& y, const Integer& r) {
    if (r == 1) return sgn(Rational(x + y));
    const int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sy;
    const int c2 = cmp(Rational(x * x), Rational(y * y * Rational(r)));
    return c2 > 0 ? sx : (c2 < 0 ? sy : 0);
  };
  if (c == 0 || n == 1) return two_term(n == 1 ? Rational(a + c) : a, b, m);
  if (b == 0 || m == 1) return two_term(m == 1 ? Rational(a + b) : a, c, n);
  const int s_left = two_term(a, b, m);
  const int s_right = sgn(c);
  if (s_left == 0) return s_right;
  if (s_left == s_right) return s_left;
  // |a + b sqrt m| vs |c| sqrt n, compared by squares: (a^2 + b^2 m - c^2 n) + 2ab sqrt m.
  const int s = two_term(Rational(a * a + b * b * Rational(m) - c * c * Rational(n)), Rational(2 * a * b), m);
  return s > 0 ? s_left : (s < 0 ? s_right : 0);
}

int QuadExtNumber::sign() const { return sign_of_sum(p_, q_, d_, 0, 1); }

std::strong_ordering operator<=>(const QuadExtNumber& a, const QuadExtNumber& b) {
  const int s = sign_of_sum(Rational(a.p_ - b.p_), a.q_, a.d_, Rational(-b.q_), b.d_);
  return s <=> 0;
}

namespace {

const Integer& common_radicand(const QuadExtNumber& a, const QuadExtNumber& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  fail(ErrorCode::InvalidArgument, "arithmetic across different square roots is not supported");
}

}  // namespace

QuadExtNumber operator+(const QuadExtNumber& a, const QuadExtNumber& b) {
  const Integer d = common_radicand(a, b);
  return QuadExtNumber(a.p_ + b.p_, a.q_ + b.q_, d);
}

QuadExtNumber operator-(const QuadExtNumber& a, const QuadExtNumber& b) { return a + (-b); }

QuadExtNumber operator*(const QuadExtNumber& a, const QuadExtNumber& b) {
  const Integer d = common_radicand(a, b);
  return QuadExtNumber(a.p_ * b.p_ + a.q_ * b.q_ * Rational(d), a.p_ * b.q_ + a.q_ * b.p_, d);
}

QuadExtNumber QuadExtNumber::reciprocal() const {
  const Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
  if (norm == 0) fail(ErrorCode::InvalidArgument, "reciprocal of zero");
  return QuadExtNumber(p_ / norm, -q_ / norm, d_);
}

Integer QuadExtNumber::floor() const {
  // Bracket q sqrt(d) = sign(q) sqrt(N/M) between integer square roots, then fix up exactly.
  Rational lower = p_;
  if (q_ != 0) {
    const Rational sq = q_ * q_ * Rational(d_);
    const Integer nm = sq.get_num() * sq.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), nm.get_mpz_t());
    const Rational denom(sq.get_den());
    lower += q_ > 0 ? Rational(Rational(s) / denom) : Rational(-Rational(s + 1) / denom);
  }
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
  while (QuadExtNumber(Rational(n)) > *this) --n;
  while (QuadExtNumber(Rational(n + 1)) <= *this) ++n;
  return n;
}

std::string QuadExtNumber::approx(int significant_digits) const {
  mpf_class p(p_, 512), q(q_, 512), d(d_, 512);
  mpf_class root(0, 512);
  mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  mpf_class value(p + q * root, 512);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", significant_digits, value.get_mpf_t());
  return buf;
}

double QuadExtNumber::to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadExtNumber::to_string() const {
  if (is_rational()) return bstab::to_string(p_);
  std::string out;
  if (p_ != 0) out = bstab::to_string(p_) + (q_ > 0 ? " + " : " - ");
  else if (q_ < 0) out = "-";
  const Rational aq = abs(q_);
  if (aq != 1) out += bstab::to_string(aq) + "*";
  out += "sqrt(" + d_.get_str() + ")";
  return out;
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.type != b.type) return static_cast<int>(a.type) <=> static_cast<int>(b.type);
  if (a.type != Bound::Type::Finite) return std::strong_ordering::equal;
  return a.value <=> b.value;
}

bool Interval::contains(const QuadExtNumber& x) const {
  const Bound bx = Bound::at(x);
  return lo < bx && bx < hi;
}

BRange::BRange(std::vector<Interval> intervals) {
  for (auto& iv : intervals)
    if (!iv.empty()) intervals_.push_back(std::move(iv));
  std::sort(intervals_.begin(), intervals_.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].lo < intervals_[i - 1].hi) fail(ErrorCode::InvalidArgument, "BRange intervals overlap");
  }
}

bool BRange::contains(const QuadExtNumber& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) { return iv.contains(x); });
}

BRange BRange::intersect(const BRange& o) const {
  std::vector<Interval> out;
  for (const auto& a : intervals_)
    for (const auto& b : o.intervals_) {
      Interval iv{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
      if (!iv.empty()) out.push_back(std::move(iv));
    }
  return BRange(std::move(out));
}

namespace {

// Simplest rational in (x, y) with 0 <= x < y, where y may be +inf and x is finite.
Rational simplest_nonneg(const QuadExtNumber& x, const Bound& y) {
  const Integer n = x.floor();
  const QuadExtNumber next(Rational(n + 1));
  if (!y.is_finite() || next < y.value) return Rational(n + 1);
  // x and y both lie in [n, n+1]; recurse on the reciprocals of the fractional parts.
  const QuadExtNumber fx = x - QuadExtNumber(Rational(n));
  const QuadExtNumber fy = y.value - QuadExtNumber(Rational(n));
  const Bound upper = fx.sign() == 0 ? Bound::pos_inf() : Bound::at(fx.reciprocal());
  const Rational inner = simplest_nonneg(fy.reciprocal(), upper);
  return Rational(n) + 1 / inner;
}

}  // namespace

Rational simplest_rational_between(const Bound& lo, const Bound& hi) {
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "empty interval has no rational point");
  const Bound zero = Bound::at(QuadExtNumber(Rational(0)));
  if (lo < zero && zero < hi) return 0;
  if (hi <= zero) {
    const Bound nlo = hi.is_finite() ? Bound::at(-hi.value) : Bound::pos_inf();
    const Bound nhi = lo.is_finite() ? Bound::at(-lo.value) : Bound::pos_inf();
    return -simplest_rational_between(nlo, nhi);
  }
  return simplest_nonneg(lo.value, hi);
}

Rational BRange::simplest_rational(std::size_t interval_index) const {
  if (interval_index >= intervals_.size()) fail(ErrorCode::InvalidArgument, "BRange interval index out of range");
  return simplest_rational_between(intervals_[interval_index].lo, intervals_[interval_index].hi);
}

QuadExtNumber QuadPoly::operator()(const QuadExtNumber& b) const {
  return (QuadExtNumber(q2) * b + QuadExtNumber(q1)) * b + QuadExtNumber(q0);
}

QuadPoly QuadPoly::reflected(const Rational& shift) const {
  // q(s - c) = q2 c^2 - (2 q2 s + q1) c + (q2 s^2 + q1 s + q0)
  return {q2, -(2 * q2 * shift + q1), (*this)(shift)};
}

std::vector<QuadExtNumber> QuadPoly::real_roots() const {
  if (q2 == 0) {
    if (q1 == 0) return {};
    return {QuadExtNumber(Rational(-q0 / q1))};
  }
  const Rational disc = q1 * q1 - 4 * q2 * q0;
  if (disc < 0) return {};
  const QuadExtNumber center(Rational(-q1 / (2 * q2)));
  if (disc == 0) return {center};
  const QuadExtNumber half_width = QuadExtNumber::sqrt_of(disc) * QuadExtNumber(Rational(1 / (2 * abs(q2))));
  return {center - half_width, center + half_width};
}

BRange QuadPoly::positivity_set() const {
  const auto roots = real_roots();
  if (q2 == 0) {
    if (q1 == 0) return q0 > 0 ? BRange::all() : BRange::none();
    const Bound r = Bound::at(roots.front());
    return q1 > 0 ? BRange({Interval{r, Bound::pos_inf()}}) : BRange({Interval{Bound::neg_inf(), r}});
  }
  if (q2 > 0) {
    if (roots.empty()) return BRange::all();
    const Bound lo = Bound::at(roots.front()), hi = Bound::at(roots.back());
    return BRange({Interval{Bound::neg_inf(), lo}, Interval{hi, Bound::pos_inf()}});
  }
  if (roots.size() < 2) return BRange::none();
  return BRange({Interval{Bound::at(roots[0]), Bound::at(roots[1])}});
}

}  // namespace bstab
