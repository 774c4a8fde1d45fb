#include "bstab/walls.hpp"

#include <algorithm>

#include "bstab/error.hpp"

namespace bstab {

EpsPolynomial::EpsPolynomial(Coords coefficients) : a_(std::move(coefficients)) { trim(); }

EpsPolynomial::EpsPolynomial(const Rational& constant) : a_{constant} { trim(); }

void EpsPolynomial::trim() {
  while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

EpsPolynomial EpsPolynomial::at(const Rational& t) const {
  Coords out = a_;
  Rational power = 1;
  for (auto& c : out) {
    c *= power;
    power *= t;
  }
  return EpsPolynomial(std::move(out));
}

int EpsPolynomial::sign() const {
  for (const auto& c : a_)
    if (c != 0) return sgn(c);
  return 0;
}

EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b) {
  Coords out = zeros(std::max(a.a_.size(), b.a_.size()));
  for (std::size_t i = 0; i < a.a_.size(); ++i) out[i] += a.a_[i];
  for (std::size_t i = 0; i < b.a_.size(); ++i) out[i] += b.a_[i];
  return EpsPolynomial(std::move(out));
}

EpsPolynomial operator-(const EpsPolynomial& a) { return EpsPolynomial(scale(-1, a.a_)); }

EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b) { return a + (-b); }

EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b) {
  if (a.a_.empty() || b.a_.empty()) return {};
  Coords out = zeros(a.a_.size() + b.a_.size() - 1);
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    for (std::size_t j = 0; j < b.a_.size(); ++j) out[i + j] += a.a_[i] * b.a_[j];
  return EpsPolynomial(std::move(out));
}

FamilyCharge family_charge_scaled(const ContractionModel& model, const ChernVector& v) {
  if (!is_surface(model.kind())) fail(ErrorCode::Precondition, "precondition violated: the wall family is defined on surface models");
  model.check(v);
  const DivisorClass ch1{v.ch1};
  const DivisorClass c = model.exceptional_divisor();
  const Rational c2 = model.intersect(c, c);
  // (f*w + sC)^2 = w + s^2 C^2 since f*w.C = 0.
  EpsPolynomial re(Coords{-v.top() + model.w() / 2 * v.ch0, 0, c2 / 2 * v.ch0});
  EpsPolynomial im(Coords{model.intersect(ch1, model.fstar_omega()), model.intersect(ch1, c)});
  return {std::move(re), std::move(im)};
}

FamilyCharge family_charge(const ContractionModel& model, const ChernVector& v, const Rational& t) {
  const FamilyCharge z = family_charge_scaled(model, v);
  return {z.re.at(t), z.im.at(t)};
}

PhaseOrder phase_order_family(const ContractionModel& model, const ChernVector& a, const ChernVector& b,
                              const Rational& t) {
  const FamilyCharge za = family_charge(model, a, t);
  const FamilyCharge zb = family_charge(model, b, t);
  return BasicPhaseKey<EpsPolynomial>(za.re, za.im).compare(BasicPhaseKey<EpsPolynomial>(zb.re, zb.im));
}

const char* to_string(ModuliObjectName n) {
  switch (n) {
    case ModuliObjectName::OxOnC: return "O_x_on_C";
    case ModuliObjectName::LfO0: return "Lf_O_0";
    case ModuliObjectName::OCPlusOCm1: return "OC_plus_OCm1";
  }
  return "?";
}

ModuliObjectName parse_moduli_object(std::string_view text) {
  for (auto n : {ModuliObjectName::OxOnC, ModuliObjectName::LfO0, ModuliObjectName::OCPlusOCm1})
    if (text == to_string(n)) return n;
  fail(ErrorCode::InvalidArgument,
       "unknown moduli object \"" + std::string(text) + "\" (expected O_x_on_C, Lf_O_0 or OC_plus_OCm1)");
}

ModuliObject make_moduli_object(const ContractionModel& model, ModuliObjectName name) {
  if (!is_surface(model.kind())) fail(ErrorCode::Precondition, "precondition violated: moduli objects are built from the surface catalog");
  const auto catalog = simples(model);
  const auto find = [&](std::string_view n) {
    return *std::find_if(catalog.begin(), catalog.end(), [&](const SimpleClass& s) { return s.name == n; });
  };
  const SimpleClass oc = find("O_C");
  const SimpleClass ocm1 = find("O_C(-1)[1]");
  switch (name) {
    case ModuliObjectName::OxOnC: return {name, oc, ocm1, false};
    case ModuliObjectName::LfO0: return {name, ocm1, oc, false};
    case ModuliObjectName::OCPlusOCm1: return {name, oc, ocm1, true};
  }
  fail(ErrorCode::InvalidArgument, "unknown moduli object");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::StrictlySemistable: return "StrictlySemistable";
    case Verdict::Unstable: return "Unstable";
  }
  return "?";
}

Verdict stability_verdict(const ContractionModel& model, const ModuliObject& obj, const Rational& t) {
  const PhaseOrder order = phase_order_family(model, obj.sub.shifted(), obj.quotient.shifted(), t);
  if (order == PhaseOrder::Equal) return Verdict::StrictlySemistable;
  if (obj.split) return Verdict::Unstable;
  return order == PhaseOrder::Less ? Verdict::Stable : Verdict::Unstable;
}

WallSolution solve_wall_param(const ContractionModel& model, const ChernVector& a, const ChernVector& b) {
  const FamilyCharge za = family_charge_scaled(model, a);
  const FamilyCharge zb = family_charge_scaled(model, b);
  WallSolution out;
  out.wall_function = za.re * zb.im - za.im * zb.re;
  if (out.wall_function.is_zero()) {
    out.always_aligned = true;
  } else if (out.wall_function.coefficient(0) == 0) {
    out.roots.push_back(0);
  }
  return out;
}

}  // namespace bstab
