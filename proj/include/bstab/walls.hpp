#pragma once

#include <string>
#include <vector>

#include "bstab/catalog.hpp"
#include "bstab/charges.hpp"

namespace bstab {

/// Polynomial sum_k a_k x^k in a positive infinitesimal x, ordered
/// lexicographically: the sign is the sign of the lowest nonzero coefficient.
///
/// Family charges are built in the scaled variable s = eps*t; at(t) rewrites
/// them in eps alone, after which sign() is the sign for 0 < eps << 1.
class EpsPolynomial {
 public:
  EpsPolynomial() = default;
  explicit EpsPolynomial(Coords coefficients);
  EpsPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  const Coords& coefficients() const { return a_; }
  Rational coefficient(std::size_t k) const { return k < a_.size() ? a_[k] : Rational(0); }
  bool is_zero() const { return a_.empty(); }

  /// Substitutes s = eps*t: coefficient k becomes a_k t^k.
  EpsPolynomial at(const Rational& t) const;
  int sign() const;

  friend EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator-(const EpsPolynomial& a);
  bool operator==(const EpsPolynomial&) const = default;

 private:
  void trim();
  Coords a_;
};

inline int sign(const EpsPolynomial& p) { return p.sign(); }

/// Charge of the family Z_{f*w + eps t C}; each part is an EpsPolynomial.
struct FamilyCharge {
  EpsPolynomial re;
  EpsPolynomial im;
};

/// Family charge in the scaled variable s = eps t:
/// re = -ch2 + (w + s^2 C^2) ch0 / 2, im = ch1.f*w + s ch1.C.
FamilyCharge family_charge_scaled(const ContractionModel& model, const ChernVector& v);
/// The same charge at a fixed t, as polynomials in eps.
FamilyCharge family_charge(const ContractionModel& model, const ChernVector& v, const Rational& t);

/// Exact phase comparison for the deformed stability condition at parameter t.
PhaseOrder phase_order_family(const ContractionModel& model, const ChernVector& a, const ChernVector& b,
                              const Rational& t);

/// The three objects whose (semi)stability changes across the wall t = 0.
enum class ModuliObjectName { OxOnC, LfO0, OCPlusOCm1 };

struct ModuliObject {
  ModuliObjectName name;
  SimpleClass sub;
  SimpleClass quotient;
  bool split = false;
  ChernVector chern() const { return sub.shifted() + quotient.shifted(); }
};

/// "O_x_on_C", "Lf_O_0", "OC_plus_OCm1".
const char* to_string(ModuliObjectName n);
ModuliObjectName parse_moduli_object(std::string_view text);

/// O_x (x on C): O_C -> O_x -> O_C(-1)[1]; Lf*O_0: O_C(-1)[1] -> Lf*O_0 -> O_C;
/// and the split sum O_C + O_C(-1)[1]. Surface models only.
ModuliObject make_moduli_object(const ContractionModel& model, ModuliObjectName name);

enum class Verdict { Stable, StrictlySemistable, Unstable };
const char* to_string(Verdict v);

/// Split objects are strictly semistable at t = 0 and unstable otherwise. A
/// non-split extension of two stable factors is stable iff its subobject has
/// smaller phase than its quotient, strictly semistable on equality.
Verdict stability_verdict(const ContractionModel& model, const ModuliObject& obj, const Rational& t);

/// Wall between two classes: zeros in t of the cross product
/// W = Re_A Im_B - Im_A Re_B. For infinitesimal eps the only finite root
/// possible is t = 0, present exactly when W has no constant term.
struct WallSolution {
  bool always_aligned = false;
  std::vector<Rational> roots;
  EpsPolynomial wall_function;  ///< W in the scaled variable s = eps t
};

WallSolution solve_wall_param(const ContractionModel& model, const ChernVector& a, const ChernVector& b);

}  // namespace bstab
