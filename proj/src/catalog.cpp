#include "bstab/catalog.hpp"

#include <algorithm>

#include "bstab/error.hpp"

namespace bstab {

DivisorSheafData cotangent_p2(const DivisorGeometry& geo) {
  if (geo.labels.size() != 1) fail(ErrorCode::InvalidArgument, "cotangent_p2 needs a P^2 geometry");
  // 0 -> Omega -> O(-1)^3 -> O -> 0
  return line_bundle_on_divisor(geo, {-1}).scaled(3) + line_bundle_on_divisor(geo, {0}).scaled(-1);
}

std::vector<DivisorBuildingBlock> divisor_building_blocks(const ContractionModel& model) {
  const DivisorGeometry geo = divisor_geometry(model);
  const auto line = [&](Coords c1) { return line_bundle_on_divisor(geo, c1); };
  switch (model.kind()) {
    case ContractionKind::TII:
      return {{"O(-3)", line({-3})},
              {"Omega(-1)", tensor_line_bundle(geo, cotangent_p2(geo), {-1})},
              {"O(-2)", line({-2})}};
    case ContractionKind::TIII: {
      // 0 -> S_3 -> O(-1,0)^2 + O(0,-1)^2 -> O -> 0
      const DivisorSheafData s3 = line({-1, 0}).scaled(2) + line({0, -1}).scaled(2) + line({0, 0}).scaled(-1);
      return {{"O(-2,-2)", line({-2, -2})},
              {"S_3(-1,-1)", tensor_line_bundle(geo, s3, {-1, -1})},
              {"O(-1,-2)", line({-1, -2})},
              {"O(-2,-1)", line({-2, -1})}};
    }
    case ContractionKind::TIV: {
      // 0 -> S_4 -> Omega^3 -> O(-1) -> 0
      const DivisorSheafData s4 = cotangent_p2(geo).scaled(3) + line({-1}).scaled(-1);
      return {{"O(-3)", line({-3})},
              {"S_4(-1)", tensor_line_bundle(geo, s4, {-1})},
              {"Omega(-1)", tensor_line_bundle(geo, cotangent_p2(geo), {-1})}};
    }
    case ContractionKind::TV:
      // Only Cartier line bundles (multiples of h = 2C) are pushed through GRR on the cone.
      return {{"O_D", line({0})}, {"O_D(-1)", line({-2})}, {"O_D(-2)", line({-4})}};
    default: break;
  }
  fail(ErrorCode::Precondition, "precondition violated: building blocks exist only for point contractions (TII-TV)");
}

TypeVAnchors type_v_anchors(const ContractionModel& model) {
  if (model.kind() != ContractionKind::TV) fail(ErrorCode::Precondition, "precondition violated: type V anchors need a TV model");
  const std::size_t c = model.curve_index("C");
  const auto vec = [&](const Rational& d, const Rational& curve, const Rational& top) {
    ChernVector v = model.zero();
    v.ch1[1] = d;
    v.ch2[c] = curve;
    v.ch3 = top;
    return v;
  };
  return {vec(1, -1, Rational(1, 3)), vec(3, -1, -1), vec(1, 0, Rational(-1, 6))};
}

std::vector<SimpleClass> simples(const ContractionModel& model) {
  const ContractionKind kind = model.kind();
  std::vector<SimpleClass> out;
  const auto add = [&](std::string name, ChernVector v, long shift) {
    out.push_back(SimpleClass{std::move(name), kind, std::move(v), shift, false});
  };
  switch (kind) {
    case ContractionKind::SurfaceBlowdown:
      add("O_C", grr_push_fiber_line(model, 0), 0);
      add("O_C(-1)[1]", grr_push_fiber_line(model, -1), 1);
      break;
    case ContractionKind::TI:
      add("O_L(-2)[1]", grr_push_fiber_line(model, -2), 1);
      add("O_L(-1)", grr_push_fiber_line(model, -1), 0);
      break;
    case ContractionKind::TII:
    case ContractionKind::TIII:
    case ContractionKind::TIV: {
      // Shifts follow the position in the exceptional collection: [2], [1], then sheaves.
      const auto blocks = divisor_building_blocks(model);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const long shift = i == 0 ? 2 : (i == 1 ? 1 : 0);
        const std::string suffix = shift == 0 ? "" : "[" + std::to_string(shift) + "]";
        add(blocks[i].name + suffix, grr_push_divisor(model, blocks[i].sheaf), shift);
      }
      break;
    }
    case ContractionKind::TV: {
      // O_D(-1) = O_D(D), so tensoring with O_X(D) is the twist with b = -1.
      const TypeVAnchors a = type_v_anchors(model);
      add("O_D(-2)[2]", twist(model, a.o_minus_1, -1), 2);
      add("S_5(-1)[1]", twist(model, a.s5, -1), 1);
      add("O_D(-3C)", twist(model, a.o_minus_c, -1), 0);
      break;
    }
  }
  out.push_back(SimpleClass{kPointClassName, kind, model.point_class(), 0, true});
  return out;
}

QuadPoly twisted_ch3_poly(const ContractionModel& model, const SimpleClass& s) {
  if (!is_threefold(model.kind())) fail(ErrorCode::Precondition, "precondition violated: twisted ch3 needs a 3-fold model");
  model.check(s.chern);
  if (s.chern.ch0 != 0) fail(ErrorCode::Precondition, "precondition violated: twisted ch3 polynomial needs ch0 = 0");
  const DivisorClass d = model.exceptional_divisor();
  const Rational sgn_shift = s.shift % 2 == 0 ? 1 : -1;
  const Rational d_ch2 = model.pair_curve_divisor(d, CurveClass{s.chern.ch2});
  const Rational dd_ch1 = model.pair_curve_divisor(DivisorClass{s.chern.ch1}, model.dsq_curve());
  return {sgn_shift * dd_ch1 / 2, -sgn_shift * d_ch2, sgn_shift * s.chern.ch3};
}

BRange solve_b_range(const ContractionModel& model) {
  BRange range = BRange::all();
  for (const auto& s : simples(model)) {
    if (s.is_point) continue;
    range = range.intersect(twisted_ch3_poly(model, s).positivity_set());
  }
  return range;
}

std::optional<BRange> reference_range(ContractionKind kind) {
  const auto at = [](Rational p, Rational q, long d) { return Bound::at(QuadExtNumber(std::move(p), std::move(q), Integer(d))); };
  switch (kind) {
    case ContractionKind::TI: return BRange({Interval{at(Rational(1, 2), 0, 1), at(Rational(3, 2), 0, 1)}});
    case ContractionKind::TII: return BRange({Interval{at(2, Rational(-1, 3), 6), at(2, Rational(1, 3), 6)}});
    case ContractionKind::TIII:
    case ContractionKind::TV:
      return BRange({Interval{at(Rational(7, 6), Rational(-1, 6), 13), at(1, Rational(-1, 6), 6)},
                     Interval{at(1, Rational(1, 6), 6), at(Rational(7, 6), Rational(1, 6), 13)}});
    case ContractionKind::TIV:
      return BRange({Interval{at(Rational(3, 4), Rational(1, 12), 15), at(Rational(4, 5), Rational(1, 6), 6)}});
    case ContractionKind::SurfaceBlowdown: break;
  }
  return std::nullopt;
}

namespace {

std::string render(const Bound& b) {
  switch (b.type) {
    case Bound::Type::NegInf: return "-inf";
    case Bound::Type::PosInf: return "+inf";
    case Bound::Type::Finite: break;
  }
  return b.value.to_string();
}

std::string render(const Interval& iv) { return "(" + render(iv.lo) + ", " + render(iv.hi) + ")"; }

}  // namespace

RangeCrossCheck cross_check_range(const ContractionModel& model) {
  RangeCrossCheck out;
  out.derived = solve_b_range(model);
  out.reference = reference_range(model.kind());
  if (!out.reference) return out;

  const auto& derived = out.derived.intervals();
  std::vector<bool> used(derived.size(), false);
  const auto& ref = out.reference->intervals();
  for (std::size_t r = 0; r < ref.size(); ++r) {
    // Pair each reference interval with the derived interval sharing an endpoint,
    // falling back to any overlapping one.
    auto it = std::find_if(derived.begin(), derived.end(),
                           [&](const Interval& iv) { return iv.lo == ref[r].lo || iv.hi == ref[r].hi; });
    if (it == derived.end()) {
      it = std::find_if(derived.begin(), derived.end(),
                        [&](const Interval& iv) { return iv.lo < ref[r].hi && ref[r].lo < iv.hi; });
    }
    if (it == derived.end()) {
      out.matches = false;
      out.notes.push_back("reference interval " + render(ref[r]) + " has no derived counterpart");
      continue;
    }
    used[static_cast<std::size_t>(it - derived.begin())] = true;
    if (!(it->lo == ref[r].lo)) {
      out.mismatches.push_back({r, false, it->lo, ref[r].lo});
      out.notes.push_back("lower endpoint: derived " + render(it->lo) + " vs reference " + render(ref[r].lo));
    }
    if (!(it->hi == ref[r].hi)) {
      out.mismatches.push_back({r, true, it->hi, ref[r].hi});
      out.notes.push_back("upper endpoint: derived " + render(it->hi) + " vs reference " + render(ref[r].hi));
    }
  }
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (!used[i]) {
      out.unreferenced.push_back(derived[i]);
      out.notes.push_back("derived interval " + render(derived[i]) + " is absent from the reference");
    }
  }
  out.matches = out.matches && out.mismatches.empty() && out.unreferenced.empty();
  return out;
}

}  // namespace bstab
