#include "doctest.h"

#include "bstab/catalog.hpp"
#include "bstab/charges.hpp"
#include "bstab/error.hpp"
#include "bstab/inequalities.hpp"
#include "support.hpp"

using namespace bstab;
using namespace testing_support;

TEST_CASE("discriminant examples") {
  const auto s1 = model(ContractionKind::SurfaceBlowdown, 1);
  CHECK(bg_discriminant(s1, s1.surface_class(1, 0, 0, 0)).margin == 0);
  CHECK(bg_discriminant(s1, s1.surface_class(1, 0, 0, 0)).holds);
  CHECK(bg_discriminant(s1, s1.surface_class(1, 0, 1, 0)).margin == -1);
  CHECK_FALSE(bg_discriminant(s1, s1.surface_class(1, 0, 1, 0)).holds);
  const auto s4 = model(ContractionKind::SurfaceBlowdown, 4);
  CHECK(bg_discriminant(s4, s4.surface_class(2, 1, 0, 0)).margin == 4);
  // 3-fold form contracts with f*w: (f*w)^3 = w.
  const auto t = model(ContractionKind::TII, 5);
  CHECK(bg_discriminant(t, t.threefold_class(1, 1, 0, zeros(2), 0)).margin == 5);
}

TEST_CASE("weak surface form examples") {
  const auto s1 = model(ContractionKind::SurfaceBlowdown, 1);
  CHECK(bg_weak_surface(s1, s1.surface_class(1, 1, 0, 0)).margin == 1);
  const auto s2 = model(ContractionKind::SurfaceBlowdown, 2);
  CHECK(bg_weak_surface(s2, s2.surface_class(1, 0, 0, 1)).margin == -4);
  CHECK_FALSE(bg_weak_surface(s2, s2.surface_class(1, 0, 0, 1)).holds);
  CHECK(bg_weak_surface(s1, s1.surface_class(0, 0, 1, Q(1, 2))).margin == 0);
  CHECK(bg_weak_surface(s1, s1.surface_class(0, 0, 1, Q(1, 2))).holds);
  CHECK_THROWS_AS(bg_weak_surface(model(ContractionKind::TV), model(ContractionKind::TV).zero()), Error);
}

TEST_CASE("strong form examples") {
  const auto s = model(ContractionKind::SurfaceBlowdown, 3);
  const auto cat = simples(s);
  for (const Rational c : {Q(0), Q(1), Q(7, 2)}) {
    CHECK(bg_strong_margin(s, find_simple(cat, "O_C").shifted(), c, -1).margin == 0);
    CHECK(bg_strong_margin(s, find_simple(cat, "O_C(-1)[1]").shifted(), c, -1).margin == 0);
    CHECK(bg_strong_margin(s, s.point_class(), c, -1).margin == 1);
  }
  CHECK(bg_strong_margin(s, s.surface_class(1, 2, 0, 0), 1, 0).margin == 24);
  CHECK_THROWS_AS(bg_strong_margin(s, s.point_class(), 0, 1), Error);
}

TEST_CASE("threefold margin examples") {
  const auto t = model(ContractionKind::TV);
  for (const Rational b : {Q(0), Q(4, 7), Q(-3)}) CHECK(bg_threefold_margin(t, b, t.threefold_class(1, 0, 0, zeros(2), 0)).margin == 0);
  CHECK(bg_threefold_margin(t, 0, t.threefold_class(1, 1, 0, zeros(2), 0)).margin == 1);
  Coords ch2 = zeros(2);
  ch2[t.curve_index("(f*w)^2")] = 1;  // f*w.(f*w)^2 = w = 1
  CHECK(bg_threefold_margin(t, 0, t.threefold_class(2, 0, 0, ch2, 0)).margin == -4);
  CHECK_THROWS_AS(bg_threefold_margin(t, 0, t.point_class()), Error);
  CHECK_THROWS_AS(bg_threefold_margin(t, 0, t.threefold_class(-1, 0, 0, zeros(2), 0)), Error);
}

TEST_CASE("support norm and ratio") {
  const auto s = model(ContractionKind::SurfaceBlowdown);
  CHECK(support_norm(s, s.surface_class(0, 0, 2, 3)) == 3);
  CHECK(support_norm(s, s.surface_class(1, 1, 0, 0)) == 1);
  CHECK(support_norm(s, s.zero()) == 0);
  CHECK(support_norm(s, s.surface_class(0, 0, -5, 1)) == 5);
  CHECK(support_ratio_sq(s, s.point_class()) == 1);
  const auto cat = simples(s);
  CHECK(support_ratio_sq(s, find_simple(cat, "O_C").shifted()) == 4);
  CHECK(support_ratio_sq(s, find_simple(cat, "O_C(-1)[1]").shifted()) == 4);
  CHECK_THROWS_AS(support_ratio_sq(s, s.zero()), Error);
}

TEST_CASE("discriminant implies weak form") {
  RandomRationals rng(41);
  for (const Rational w : {Q(1), Q(2), Q(5, 3)}) {
    const auto s = model(ContractionKind::SurfaceBlowdown, w);
    for (int i = 0; i < 500; ++i) {
      const auto v = random_class(s, rng);
      if (bg_discriminant(s, v).holds) CHECK(bg_weak_surface(s, v).holds);
    }
  }
}

TEST_CASE("support ratio is scale invariant") {
  RandomRationals rng(42);
  const auto s = model(ContractionKind::SurfaceBlowdown, 2);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_class(s, rng);
    const auto z = z_surface(s, v);
    if (z.re == 0 && z.im == 0) continue;
    const long lambda = rng.integer(1, 12);
    CHECK(support_ratio_sq(s, v.scaled(lambda)) == support_ratio_sq(s, v));
  }
}

TEST_CASE("strong form equality singles out the curve classes in the catalog") {
  for (const Rational w : {Q(1), Q(3)}) {
    const auto s = model(ContractionKind::SurfaceBlowdown, w);
    for (const auto& entry : simples(s)) {
      const bool curve_class = entry.name == "O_C" || entry.name == "O_C(-1)[1]";
      CHECK((bg_strong_margin(s, entry.shifted(), 1, -1).margin == 0) == curve_class);
      CHECK((bg_strong_margin(s, entry.shifted().scaled(-1), 1, -1).margin == 0) == curve_class);
    }
  }
}
