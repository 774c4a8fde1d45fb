#include "doctest.h"

#include "bstab/catalog.hpp"
#include "bstab/chern.hpp"
#include "bstab/error.hpp"
#include "support.hpp"

using namespace bstab;
using namespace testing_support;

namespace {

ChernVector tv(const ContractionModel& m, const Rational& d, const Rational& c, const Rational& top) {
  Coords ch2 = zeros(m.curve_labels().size());
  ch2[m.curve_index("C")] = c;
  return m.threefold_class(0, 0, d, ch2, top);
}

ChernVector p2_class(const ContractionModel& m, const Rational& d, const Rational& l, const Rational& top) {
  Coords ch2 = zeros(m.curve_labels().size());
  ch2[m.curve_index("l")] = l;
  return m.threefold_class(0, 0, d, ch2, top);
}

}  // namespace

TEST_CASE("twist examples") {
  const auto m = model(ContractionKind::TV);
  const auto v = tv(m, 1, -1, Q(1, 3));
  for (const Rational b : {Q(0), Q(1, 2), Q(-7, 3), Q(5)}) {
    CHECK(twist(m, v, b).ch3 == Q(1, 3) - b + b * b);
  }
  const auto u = tv(m, 1, -2, Q(5, 6));
  for (const Rational b : {Q(0), Q(1, 2), Q(-7, 3), Q(5)}) {
    const Rational c = 1 - b;
    CHECK(twist(m, u, b).ch3 == c * c - Q(1, 6));
  }
  CHECK_THROWS_AS(twist(model(ContractionKind::SurfaceBlowdown), model(ContractionKind::SurfaceBlowdown).point_class(), 1), Error);
}

TEST_CASE("twist by zero is the identity") {
  RandomRationals rng(21);
  for (auto k : kAllKinds) {
    const auto m = model(k);
    for (int i = 0; i < 20; ++i) {
      const auto v = random_class(m, rng);
      CHECK(twist(m, v, 0) == v);
    }
  }
}

TEST_CASE("twist agrees with the exponential series and obeys the group law") {
  RandomRationals rng(22);
  for (auto k : kAllKinds) {
    if (is_surface(k)) continue;
    const auto m = k == ContractionKind::TI ? ContractionModel::make_type_i(Q(3), {Q(-2), Q(7)}) : model(k, Q(5, 2));
    CAPTURE(to_string(k));
    for (int i = 0; i < 40; ++i) {
      const auto v = random_class(m, rng);
      const Rational b1 = rng.next(), b2 = rng.next();
      CHECK(twist(m, v, b1) == series_twist(m, v, b1));
      CHECK(twist(m, twist(m, v, b1), b2) == twist(m, v, Rational(b1 + b2)));
    }
  }
}

TEST_CASE("GRR on the type V quadric cone") {
  const auto m = model(ContractionKind::TV);
  const auto geo = divisor_geometry(m);
  const auto o_d = grr_push_divisor(m, line_bundle_on_divisor(geo, {0}));
  CHECK(o_d == tv(m, 1, 1, Q(1, 3)));
  // Tensoring with O_X(D) restricts to O_D(-1): the untwist of the anchor vector.
  CHECK(twist(m, o_d, -1) == type_v_anchors(m).o_minus_1);
  CHECK(grr_push_divisor(m, line_bundle_on_divisor(geo, {-2})) == type_v_anchors(m).o_minus_1);
}

TEST_CASE("GRR examples on P^2") {
  const auto ii = model(ContractionKind::TII);
  const auto geo = divisor_geometry(ii);
  const auto omega_minus_1 = tensor_line_bundle(geo, cotangent_p2(geo), {-1});
  CHECK(omega_minus_1.rank == 2);
  CHECK(omega_minus_1.c1 == Coords{-5});
  CHECK(omega_minus_1.ch2 == Q(11, 2));
  CHECK(grr_push_divisor(ii, omega_minus_1) == p2_class(ii, 2, -4, Q(10, 3)));
  CHECK(grr_push_divisor(ii, line_bundle_on_divisor(geo, {-3})) == p2_class(ii, 1, Q(-5, 2), Q(19, 6)));
  // On the type IV divisor the normal bundle is O(-2) and the same sheaf pushes to (0, 2D, -3l, 11/6).
  const auto iv = model(ContractionKind::TIV);
  const auto geo4 = divisor_geometry(iv);
  CHECK(grr_push_divisor(iv, tensor_line_bundle(geo4, cotangent_p2(geo4), {-1})) == p2_class(iv, 2, -3, Q(11, 6)));
  CHECK_THROWS_AS(grr_push_divisor(model(ContractionKind::TI), line_bundle_on_divisor(geo, {0})), Error);
}

TEST_CASE("GRR matches the series oracle on random sheaves") {
  RandomRationals rng(23);
  for (auto k : {ContractionKind::TII, ContractionKind::TIII, ContractionKind::TIV}) {
    const auto m = model(k);
    const auto geo = divisor_geometry(m);
    const SmoothDivisor sd = smooth_divisor(k);
    for (int i = 0; i < 40; ++i) {
      Coords c1 = zeros(geo.labels.size());
      for (auto& c : c1) c = rng.integer(-4, 4);
      const long rank = rng.integer(-3, 3);
      // rank copies of a line bundle, as a sum of ring elements
      const RingElement ch = sd.ring.scaled(sd.ring.exp(c1), rank);
      CHECK(grr_push_divisor(m, line_bundle_on_divisor(geo, c1).scaled(rank)) == oracle_push(m, ch));
    }
  }
}

TEST_CASE("GRR trace records the three factors") {
  const auto m = model(ContractionKind::TII);
  const auto geo = divisor_geometry(m);
  const auto trace = grr_push_divisor_traced(m, line_bundle_on_divisor(geo, {-2}));
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[1].degree0 == 1);
  CHECK(trace.steps[1].degree1 == Coords{Q(1, 2)});
  CHECK(trace.steps[1].degree2 == Q(1, 6));
  CHECK(trace.result == p2_class(m, 1, Q(-3, 2), Q(7, 6)));
}

TEST_CASE("projection formula on building blocks") {
  for (auto k : {ContractionKind::TII, ContractionKind::TIII, ContractionKind::TIV, ContractionKind::TV}) {
    const auto m = model(k);
    const auto geo = divisor_geometry(m);
    CAPTURE(to_string(k));
    for (const auto& block : divisor_building_blocks(m)) {
      for (long n = -3; n <= 3; ++n) {
        // F (x) O_D(nD) pushes to e^{nD} i_*F, a twist by b = -n.
        CHECK(grr_push_divisor(m, twist_on_divisor(geo, block.sheaf, n)) == twist(m, grr_push_divisor(m, block.sheaf), -n));
      }
    }
  }
}

TEST_CASE("exceptional line pushforward") {
  const auto m = model(ContractionKind::TI);
  const auto line = [&](const Rational& top) {
    Coords ch2 = zeros(m.curve_labels().size());
    ch2[m.curve_index("L")] = 1;
    return m.threefold_class(0, 0, 0, ch2, top);
  };
  CHECK(grr_push_fiber_line(m, -1) == line(Q(-1, 2)));
  CHECK(grr_push_fiber_line(m, -2) == line(Q(-3, 2)));
  CHECK(grr_push_fiber_line(m, 0) == line(Q(1, 2)));
  const auto s = model(ContractionKind::SurfaceBlowdown);
  CHECK(grr_push_fiber_line(s, 0) == s.surface_class(0, 0, 1, Q(1, 2)));
  CHECK_THROWS_AS(grr_push_fiber_line(model(ContractionKind::TII), 0), Error);
}

TEST_CASE("surface Euler pairing examples") {
  const auto m = model(ContractionKind::SurfaceBlowdown);
  const auto oc = m.surface_class(0, 0, 1, Q(1, 2));
  CHECK(euler_pairing_surface(m, oc, m.surface_class(1, 1, 2, 0)) == 2);
  CHECK(euler_pairing_surface(m, m.surface_class(1, 0, 0, 0), oc) == 1);
  CHECK(euler_pairing_surface(m, m.point_class(), m.point_class()) == 0);
  // K_Y-dependent terms survive for two positive-rank classes.
  CHECK_THROWS_AS(euler_pairing_surface(m, m.surface_class(1, 0, 0, 0), m.surface_class(1, 0, 0, 0)), Error);
  CHECK(euler_pairing_surface(m, m.surface_class(1, 0, 0, 0), m.surface_class(1, 0, 0, 0), CanonicalData{-3, 1}) == 1);
  CHECK_THROWS_AS(euler_pairing_surface(model(ContractionKind::TV), model(ContractionKind::TV).zero(), model(ContractionKind::TV).zero()),
                  Error);
}

TEST_CASE("Euler pairing identities on random classes") {
  const auto m = model(ContractionKind::SurfaceBlowdown, 2);
  const auto oc = m.surface_class(0, 0, 1, Q(1, 2));
  RandomRationals rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto e = random_surface_class(m, rng);
    const Rational c_dot = m.intersect(m.exceptional_divisor(), DivisorClass{e.ch1});
    CHECK(euler_pairing_surface(m, oc, e) == -c_dot);
    const auto t = m.surface_class(0, 0, rng.integer(-6, 6), Q(rng.integer(-9, 9), 2));
    const Rational ct = m.intersect(m.exceptional_divisor(), DivisorClass{t.ch1});
    CHECK(euler_pairing_surface(m, m.surface_class(1, 0, 0, 0), t) == t.ch2[0] - ct / 2);
  }
}

TEST_CASE("Euler pairing matches a direct Riemann-Roch expansion") {
  // chi(v, w) = int ch(v)^dual ch(w) td(X), td(X) = 1 - K/2 + chi(O), K = f*K_Y + C.
  RandomRationals rng(25);
  const auto m = model(ContractionKind::SurfaceBlowdown, 3);
  const CanonicalData cd{Q(-7), Q(1)};
  for (int i = 0; i < 100; ++i) {
    const auto v = random_surface_class(m, rng);
    const auto w = random_surface_class(m, rng);
    const auto dv = dual(v);
    const Rational r = dv.ch0 * w.ch0;
    const Coords c1 = add(scale(dv.ch0, w.ch1), scale(w.ch0, dv.ch1));
    const Rational c2 = dv.ch0 * w.ch2[0] + w.ch0 * dv.ch2[0] + m.intersect(DivisorClass{dv.ch1}, DivisorClass{w.ch1});
    // K.(x f*w + a C) = x (K_Y.w) - a
    const Rational k_dot = c1[0] * cd.k_y_dot_omega - c1[1];
    CHECK(euler_pairing_surface(m, v, w, cd) == c2 - k_dot / 2 + r * cd.chi_o_x);
  }
}
