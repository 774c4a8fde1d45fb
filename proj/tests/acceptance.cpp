// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Usage: bstab_acceptance [path-to-bstab-cli]
// With the CLI path, criterion 3 also checks the command-line exit status.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bstab.h"
#include "bstab/catalog.hpp"
#include "bstab/charges.hpp"
#include "bstab/chern.hpp"
#include "bstab/inequalities.hpp"
#include "bstab/sequiv.hpp"
#include "bstab/slopes.hpp"
#include "bstab/walls.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace bstab;
using namespace testing_support;

namespace {

// Collects the first failing detail of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

Bound at(const Rational& p, const Rational& q, long d) { return Bound::at(QuadExtNumber(p, q, d)); }

const BRange kTypeVRange({Interval{at(Q(7, 6), Q(-1, 6), 13), at(1, Q(-1, 6), 6)},
                          Interval{at(1, Q(1, 6), 6), at(Q(7, 6), Q(1, 6), 13)}});

void criterion_1(Check& c) {
  const auto m = model(ContractionKind::SurfaceBlowdown);
  const auto cat = simples(m);
  c.expect(z_surface(m, find_simple(cat, "O_C").shifted()) == ChargeValue{Q(-1, 2), 0}, "Z(O_C)");
  c.expect(z_surface(m, find_simple(cat, "O_C(-1)[1]").shifted()) == ChargeValue{Q(-1, 2), 0}, "Z(O_C(-1)[1])");
  c.expect(z_surface(m, m.point_class()) == ChargeValue{-1, 0}, "Z(O_x)");
}

void criterion_2(Check& c) {
  c.expect(solve_b_range(model(ContractionKind::TI)) == BRange({Interval{Bound::at(Q(1, 2)), Bound::at(Q(3, 2))}}), "TI range");
  c.expect(solve_b_range(model(ContractionKind::TII)) == BRange({Interval{at(2, Q(-1, 3), 6), at(2, Q(1, 3), 6)}}), "TII range");
  const BRange v = solve_b_range(model(ContractionKind::TV));
  const BRange iii = solve_b_range(model(ContractionKind::TIII));
  c.expect(v == kTypeVRange, "TV range");
  c.expect(iii == kTypeVRange, "TIII range");
  c.expect(iii == v, "TIII equals TV");
  // The type III catalog must come from the GRR pushforward, not from type V data.
  const auto m3 = model(ContractionKind::TIII);
  const SurfaceRing r = smooth_divisor(ContractionKind::TIII).ring;
  const auto cat = simples(m3);
  c.expect(find_simple(cat, "O(-1,-2)").chern == oracle_push(m3, r.exp({-1, -2})), "TIII catalog via GRR");
  c.expect(find_simple(cat, "O(-2,-2)[2]").chern == oracle_push(m3, r.exp({-2, -2})), "TIII catalog via GRR");
}

void criterion_3(Check& c, const char* cli) {
  const auto check = cross_check_range(model(ContractionKind::TIV));
  const Bound lower = at(Q(3, 4), Q(1, 12), 15);
  const Bound printed_upper = at(Q(4, 5), Q(1, 6), 6);
  const Bound derived_upper = at(Q(4, 5), Q(1, 30), 141);
  bool lower_found = false;
  for (const auto& iv : check.derived.intervals()) lower_found = lower_found || iv.lo == lower;
  c.expect(lower_found, "lower endpoint 3/4 + sqrt(15)/12");
  c.expect(!check.matches, "discrepancy flagged");
  c.expect(check.mismatches.size() == 1 && check.mismatches[0].upper && check.mismatches[0].derived == derived_upper &&
               check.mismatches[0].reference == printed_upper,
           "upper endpoints reported side by side");

  bstab_model* m = nullptr;
  char* out = nullptr;
  int flag = 0;
  const bool made = bstab_model_create(BSTAB_KIND_TIV, "1", &m) == BSTAB_OK;
  c.expect(made, "C API model");
  if (made && bstab_brange_json(m, &out, &flag) == BSTAB_OK) {
    const auto j = nlohmann::json::parse(out);
    bstab_string_free(out);
    c.expect(flag == 1 && j["discrepancy"] == true, "C API discrepancy flag");
    c.expect(j["cross_check"]["mismatches"][0]["reference"]["text"] == "4/5 + 1/6*sqrt(6)", "C API reports printed value");
  } else {
    c.expect(false, "C API brange");
  }
  bstab_model_destroy(m);

  if (cli != nullptr) {
    const std::string cmd = std::string("\"") + cli + "\" brange --kind TIV > /dev/null";
    const int status = std::system(cmd.c_str());
    c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 2, "CLI exit status 2");
  }
}

void criterion_4(Check& c) {
  const auto m = model(ContractionKind::TV);
  const auto cat = simples(m);
  c.expect(twisted_ch3_poly(m, find_simple(cat, "O_D(-2)[2]")).reflected(1) == QuadPoly{1, 1, Q(1, 3)}, "c^2 + c + 1/3");
  c.expect(twisted_ch3_poly(m, find_simple(cat, "S_5(-1)[1]")).reflected(1) == QuadPoly{-3, -1, 1}, "-3c^2 - c + 1");
  c.expect(twisted_ch3_poly(m, find_simple(cat, "O_D(-3C)")).reflected(1) == QuadPoly{1, 0, Q(-1, 6)}, "c^2 - 1/6");
}

void criterion_5(Check& c) {
  const auto v = model(ContractionKind::TV);
  const MultiplicityVector point{{"point", 1}};
  const MultiplicityVector exceptional{{"O_D(-2)[2]", 1}, {"S_5(-1)[1]", 1}, {"O_D(-3C)", 2}};
  const BRange range = solve_b_range(v);
  for (std::size_t i = 0; i < range.intervals().size(); ++i) {
    const Rational b = range.simplest_rational(i);
    const auto r = decompose(v, v.point_class(), b);
    c.expect(r.solutions == std::vector<MultiplicityVector>{point, exceptional} ||
                 r.solutions == std::vector<MultiplicityVector>{exceptional, point},
             "type V solutions");
    c.expect(decompose(v, v.point_class(), b, 2).solutions == r.solutions, "type V doubled bounds");
  }
  const auto s = model(ContractionKind::SurfaceBlowdown);
  const auto rs = decompose(s, s.point_class(), 0);
  const std::vector<MultiplicityVector> expected{{{"point", 1}}, {{"O_C", 1}, {"O_C(-1)[1]", 1}}};
  c.expect(rs.solutions == expected, "surface solutions");
  c.expect(decompose(s, s.point_class(), 0, 2).solutions == rs.solutions, "surface doubled bounds");
}

void criterion_6(Check& c) {
  const auto m = model(ContractionKind::SurfaceBlowdown);
  using enum Verdict;
  struct Row {
    ModuliObjectName name;
    Verdict negative, zero, positive;
  };
  const Row table[] = {{ModuliObjectName::OxOnC, Stable, StrictlySemistable, Unstable},
                       {ModuliObjectName::LfO0, Unstable, StrictlySemistable, Stable},
                       {ModuliObjectName::OCPlusOCm1, Unstable, StrictlySemistable, Unstable}};
  for (const auto& row : table) {
    const auto obj = make_moduli_object(m, row.name);
    c.expect(stability_verdict(m, obj, -1) == row.negative, std::string(to_string(row.name)) + " at t = -1");
    c.expect(stability_verdict(m, obj, 0) == row.zero, std::string(to_string(row.name)) + " at t = 0");
    c.expect(stability_verdict(m, obj, 1) == row.positive, std::string(to_string(row.name)) + " at t = +1");
  }
  const auto cat = simples(m);
  const auto wall = solve_wall_param(m, find_simple(cat, "O_C").shifted(), find_simple(cat, "O_C(-1)[1]").shifted());
  c.expect(!wall.always_aligned && wall.roots == std::vector<Rational>{0}, "wall at t = 0");
}

void criterion_7(Check& c) {
  const auto m = model(ContractionKind::SurfaceBlowdown);
  const auto oc = m.surface_class(0, 0, 1, Q(1, 2));
  const auto ox = m.surface_class(1, 0, 0, 0);
  RandomRationals rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto e = random_surface_class(m, rng);
    const Rational c_dot_e = m.intersect(m.exceptional_divisor(), DivisorClass{e.ch1});
    c.expect(euler_pairing_surface(m, oc, e) == -c_dot_e, "chi(O_C, E) = -C.ch1(E)");
    const auto t = m.surface_class(0, 0, rng.integer(-6, 6), Q(rng.integer(-9, 9), 2));
    const Rational c_dot_t = m.intersect(m.exceptional_divisor(), DivisorClass{t.ch1});
    c.expect(euler_pairing_surface(m, ox, t) == t.ch2[0] - c_dot_t / 2, "chi(O_X, T) = ch2(T) - C.ch1(T)/2");
  }
}

void criterion_8(Check& c) {
  RandomRationals rng(2025);
  for (const Rational w : {Q(1), Q(2), Q(7, 3)}) {
    const auto m = model(ContractionKind::SurfaceBlowdown, w);
    for (int i = 0; i < 500; ++i) {
      const auto v = random_class(m, rng);
      if (bg_discriminant(m, v).holds) c.expect(bg_weak_surface(m, v).holds, "discriminant implies weak form");
    }
    for (const auto& s : simples(m)) {
      const bool curve = s.name == "O_C" || s.name == "O_C(-1)[1]";
      for (const Rational c_omega : {Q(0), Q(1), Q(5, 2)}) {
        for (int sign : {1, -1}) {
          const bool equal = bg_strong_margin(m, s.shifted().scaled(sign), c_omega, -1).margin == 0;
          c.expect(equal == curve, "strong form equality exactly on the curve classes (" + s.name + ")");
        }
      }
    }
  }
}

void criterion_9(Check& c) {
  RandomRationals rng(2026);
  for (auto k : kAllKinds) {
    if (is_surface(k)) continue;
    const auto m = model(k);
    for (int i = 0; i < 100; ++i) {
      const auto v = random_class(m, rng);
      for (int j = 0; j < 20; ++j) {
        const Rational b1 = rng.next(), b2 = rng.next();
        c.expect(twist(m, twist(m, v, b1), b2) == twist(m, v, Rational(b1 + b2)), "twist group law");
      }
      c.expect(twist(m, v, 1) == series_twist(m, v, 1), "twist matches exponential series");
    }
    if (!contracts_to_point(k)) continue;
    const auto geo = divisor_geometry(m);
    for (const auto& block : divisor_building_blocks(m)) {
      for (long n = -3; n <= 3; ++n) {
        c.expect(grr_push_divisor(m, twist_on_divisor(geo, block.sheaf, n)) == twist(m, grr_push_divisor(m, block.sheaf), -n),
                 "projection formula for " + block.name);
      }
    }
  }
}

void criterion_10(Check& c) {
  for (auto k : kAllKinds) {
    if (is_surface(k)) continue;
    const auto m = model(k);
    const BRange range = solve_b_range(m);
    std::vector<Rational> samples;
    for (std::size_t i = 0; i < range.intervals().size(); ++i) samples.push_back(range.simplest_rational(i));
    for (long n = -300; n <= 600; ++n) {
      const Rational b(n, 211);
      if (range.contains(QuadExtNumber(b))) samples.push_back(b);
    }
    for (const Rational& b : samples) {
      for (const auto& s : simples(m))
        c.expect(trichotomy(m, b, s.shifted()) == Trichotomy::CaseC, std::string(to_string(k)) + " " + s.name + " in case C");
      c.expect(trichotomy(m, b, m.threefold_class(-1, 0, 0, zeros(m.curve_labels().size()), 0)) == Trichotomy::CaseB,
               "(-1,0,0,0) in case B");
      c.expect(trichotomy(m, b, m.threefold_class(0, 1, 0, zeros(m.curve_labels().size()), 0)) == Trichotomy::CaseA,
               "(0,f*w,0,0) in case A");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"surface charges of O_C, O_C(-1)[1], O_x", criterion_1},
      {"b-ranges for types I, II, III, V", criterion_2},
      {"type IV endpoints and discrepancy flag", [cli](Check& c) { criterion_3(c, cli); }},
      {"type V twisted ch3 polynomials in c = 1 - b", criterion_4},
      {"S-equivalence systems for type V and the surface", criterion_5},
      {"wall verdict table and wall location", criterion_6},
      {"Euler pairing identities on 200 random classes", criterion_7},
      {"Bogomolov-Gieseker suite on 500 random classes", criterion_8},
      {"twist group law and projection formula", criterion_9},
      {"trichotomy cases", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!c.ok()) std::cout << " [" << c.failure() << "]";
    std::cout << "\n";
    if (!c.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
