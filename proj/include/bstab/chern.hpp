#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bstab/lattice.hpp"

namespace bstab {

/// e^{-bD} . v truncated at the top degree. Surfaces only accept b = 0.
ChernVector twist(const ContractionModel& model, const ChernVector& v, const Rational& b);

/// Intersection data of the exceptional divisor D itself (point contractions):
/// generators of (a rational span of) Pic(D), their intersection matrix on D,
/// c1(O_D(D)) in those generators, and where each generator lands in the
/// 3-fold's curve basis under i_*.
struct DivisorGeometry {
  ContractionKind kind;
  std::vector<std::string> labels;
  std::vector<Coords> form;
  Coords normal;                  ///< c1(O_D(D))
  std::vector<CurveClass> push;   ///< i_* of each generator
  Rational dot(const Coords& a, const Coords& b) const;
};

/// P^2 with generator H (TII, TIV); P^1xP^1 with H1, H2 (TIII); the quadric
/// cone with the ruling C, C.C = 1/2, hyperplane h = 2C (TV).
DivisorGeometry divisor_geometry(const ContractionModel& model);

/// Chern character of a sheaf on D: rank, c1 in DivisorGeometry generators, ch2 in points.
struct DivisorSheafData {
  ContractionKind kind;
  Rational rank;
  Coords c1;
  Rational ch2;

  DivisorSheafData& operator+=(const DivisorSheafData& o);
  friend DivisorSheafData operator+(DivisorSheafData a, const DivisorSheafData& b) { return a += b; }
  DivisorSheafData scaled(const Rational& s) const;
  bool operator==(const DivisorSheafData& o) const = default;
};

/// ch(O_D(c1)) = (1, c1, c1^2/2).
DivisorSheafData line_bundle_on_divisor(const DivisorGeometry& geo, const Coords& c1);
/// ch(F (x) L) for a line bundle L with first Chern class c1.
DivisorSheafData tensor_line_bundle(const DivisorGeometry& geo, const DivisorSheafData& f, const Coords& c1);
/// F (x) O_D(kD).
DivisorSheafData twist_on_divisor(const DivisorGeometry& geo, const DivisorSheafData& f, const Rational& k);

/// One step of a GRR derivation, for audit output.
struct GrrStep {
  std::string label;
  Rational degree0;
  Coords degree1;
  Rational degree2;
};

struct GrrTrace {
  std::vector<GrrStep> steps;  ///< ch(F), td(N)^{-1}, product
  ChernVector result;
};

/// ch(i_* F) = i_*(ch(F) . td(O_D(D))^{-1}) for a point contraction.
ChernVector grr_push_divisor(const ContractionModel& model, const DivisorSheafData& fd);
GrrTrace grr_push_divisor_traced(const ContractionModel& model, const DivisorSheafData& fd);

/// ch(i_* O_P1(k)) for the exceptional line: a fiber L of type I
/// (normal bundle O + O(-1)) or the (-1)-curve C of a surface.
/// Both give (0, 0, L, k + 1/2) resp. (0, C, k + 1/2).
ChernVector grr_push_fiber_line(const ContractionModel& model, long k);

/// Canonical data of the surface needed by Riemann-Roch when terms do not cancel.
struct CanonicalData {
  Rational k_y_dot_omega;  ///< K_Y . w
  Rational chi_o_x;        ///< chi(O_X)
};

/// ch^vee flips the sign of odd-degree components.
ChernVector dual(const ChernVector& v);

/// chi(v, w) = integral of ch(v)^vee ch(w) td(X) on the blown-up surface, with
/// K_X = f*K_Y + C. Throws Error(Precondition) when the K_Y-dependent terms do
/// not cancel and no canonical data is supplied.
Rational euler_pairing_surface(const ContractionModel& model, const ChernVector& v, const ChernVector& w,
                               const std::optional<CanonicalData>& canonical = std::nullopt);

}  // namespace bstab
