#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bstab/chern.hpp"
#include "bstab/surd.hpp"

namespace bstab {

/// A simple object of the fiber-supported perverse heart, recorded by class:
/// the unshifted Chern vector of the underlying sheaf and the homological
/// shift used to place it in the heart.
struct SimpleClass {
  std::string name;
  ContractionKind kind;
  ChernVector chern;
  long shift = 0;
  bool is_point = false;  ///< the skyscraper class away from the exceptional locus

  /// (-1)^shift . chern
  ChernVector shifted() const { return cv_shift(chern, shift); }
};

/// Name of the point-class entry present in every catalog.
inline constexpr const char* kPointClassName = "point";

/// Catalog of simple classes for the model's contraction type, point class last.
///
/// Types II-IV are pushed forward from sheaves on D through the GRR oracle;
/// type V uses the fixed X-level vectors of O_D(-1), S_5 and O_D(-C) twisted by
/// O_X(D); type I and the surface use the exceptional-line pushforward.
std::vector<SimpleClass> simples(const ContractionModel& model);

/// Sheaf on D from which a catalog entry is pushed forward (types II-IV), or
/// a Cartier line bundle on the quadric cone (type V).
struct DivisorBuildingBlock {
  std::string name;
  DivisorSheafData sheaf;
};

std::vector<DivisorBuildingBlock> divisor_building_blocks(const ContractionModel& model);

/// ch(Omega_{P^2}) from the Euler sequence, on a P^2 geometry.
DivisorSheafData cotangent_p2(const DivisorGeometry& geo);

/// Fixed X-level classes on the type V model: ch(i_*O_D(-1)), ch(i_*S_5), ch(i_*O_D(-C)).
struct TypeVAnchors {
  ChernVector o_minus_1;
  ChernVector s5;
  ChernVector o_minus_c;
};
TypeVAnchors type_v_anchors(const ContractionModel& model);

/// (-1)^shift (ch3 - b D.ch2 + b^2/2 D^2.ch1); throws for surfaces or ch0 != 0.
QuadPoly twisted_ch3_poly(const ContractionModel& model, const SimpleClass& s);

/// {b : twisted ch3 > 0 for every finite catalog entry}.
BRange solve_b_range(const ContractionModel& model);

/// Published b-range for the kind, if one exists (3-folds only).
std::optional<BRange> reference_range(ContractionKind kind);

struct EndpointMismatch {
  std::size_t reference_interval;
  bool upper;  ///< which endpoint of the reference interval disagrees
  Bound derived;
  Bound reference;
};

/// Dual-source comparison of the solver's range with the published one.
struct RangeCrossCheck {
  BRange derived;
  std::optional<BRange> reference;
  bool matches = true;
  std::vector<EndpointMismatch> mismatches;
  std::vector<Interval> unreferenced;  ///< derived intervals absent from the reference
  std::vector<std::string> notes;
};

RangeCrossCheck cross_check_range(const ContractionModel& model);

}  // namespace bstab
