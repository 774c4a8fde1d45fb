#include "bstab/chern.hpp"

#include "bstab/error.hpp"

namespace bstab {

ChernVector twist(const ContractionModel& model, const ChernVector& v, const Rational& b) {
  model.check(v);
  if (model.dimension() == 2) {
    if (b != 0) fail(ErrorCode::Precondition, "precondition violated: surface twists require b = 0");
    return v;
  }
  if (b == 0) return v;
  const DivisorClass d = model.exceptional_divisor();
  const DivisorClass ch1{v.ch1};
  const CurveClass ch2{v.ch2};
  const Rational b2 = b * b / 2;
  const Rational b3 = b * b * b / 6;

  ChernVector out = v;
  // ch1' = ch1 - b ch0 D
  out.ch1 = add(v.ch1, scale(-b * v.ch0, d.coords));
  // ch2' = ch2 - b D.ch1 + b^2/2 ch0 D^2
  const CurveClass d_ch1 = model.divisor_product(d, ch1);
  const CurveClass d_d = model.dsq_curve();
  out.ch2 = add(add(v.ch2, scale(-b, d_ch1.coords)), scale(b2 * v.ch0, d_d.coords));
  // ch3' = ch3 - b D.ch2 + b^2/2 D^2.ch1 - b^3/6 ch0 D^3
  out.ch3 = v.ch3 - b * model.pair_curve_divisor(d, ch2) + b2 * model.pair_curve_divisor(ch1, d_d) -
            b3 * v.ch0 * model.d_cube();
  return out;
}

Rational DivisorGeometry::dot(const Coords& a, const Coords& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * form[i][j];
  return s;
}

DivisorGeometry divisor_geometry(const ContractionModel& model) {
  const auto c = [&](std::string_view label) { return model.curve(model.curve_index(label)); };
  switch (model.kind()) {
    case ContractionKind::TII: return {model.kind(), {"H"}, {{1}}, {-1}, {c("l")}};
    case ContractionKind::TIII:
      return {model.kind(), {"H1", "H2"}, {{0, 1}, {1, 0}}, {-1, -1}, {c("C1"), c("C2")}};
    case ContractionKind::TIV: return {model.kind(), {"H"}, {{1}}, {-2}, {c("l")}};
    case ContractionKind::TV: return {model.kind(), {"C"}, {{Rational(1, 2)}}, {-2}, {c("C")}};
    default: break;
  }
  fail(ErrorCode::Precondition, "precondition violated: divisor pushforward needs a point contraction (TII-TV), got " +
                                    std::string(to_string(model.kind())));
}

DivisorSheafData& DivisorSheafData::operator+=(const DivisorSheafData& o) {
  if (kind != o.kind || c1.size() != o.c1.size()) fail(ErrorCode::InvalidArgument, "cannot add sheaf data on different divisors");
  rank += o.rank;
  for (std::size_t i = 0; i < c1.size(); ++i) c1[i] += o.c1[i];
  ch2 += o.ch2;
  return *this;
}

DivisorSheafData DivisorSheafData::scaled(const Rational& s) const { return {kind, s * rank, scale(s, c1), s * ch2}; }

DivisorSheafData line_bundle_on_divisor(const DivisorGeometry& geo, const Coords& c1) {
  if (c1.size() != geo.labels.size()) fail(ErrorCode::InvalidArgument, "c1 does not match the divisor's Picard generators");
  return {geo.kind, 1, c1, geo.dot(c1, c1) / 2};
}

DivisorSheafData tensor_line_bundle(const DivisorGeometry& geo, const DivisorSheafData& f, const Coords& c1) {
  if (f.kind != geo.kind || c1.size() != geo.labels.size()) fail(ErrorCode::InvalidArgument, "sheaf data does not live on this divisor");
  DivisorSheafData out = f;
  out.c1 = add(f.c1, scale(f.rank, c1));
  out.ch2 = f.ch2 + geo.dot(f.c1, c1) + f.rank * geo.dot(c1, c1) / 2;
  return out;
}

DivisorSheafData twist_on_divisor(const DivisorGeometry& geo, const DivisorSheafData& f, const Rational& k) {
  return tensor_line_bundle(geo, f, scale(k, geo.normal));
}

GrrTrace grr_push_divisor_traced(const ContractionModel& model, const DivisorSheafData& fd) {
  const DivisorGeometry geo = divisor_geometry(model);
  if (fd.kind != model.kind() || fd.c1.size() != geo.labels.size()) {
    fail(ErrorCode::InvalidArgument, "sheaf data kind does not match the model kind " + std::string(to_string(model.kind())));
  }
  // td(L)^{-1} = (1 - e^{-x})/x = 1 - x/2 + x^2/6, x = c1(O_D(D)); the x^2 term is kept.
  const Coords& x = geo.normal;
  const Coords td1 = scale(Rational(-1, 2), x);
  const Rational td2 = geo.dot(x, x) / 6;

  const Coords prod1 = add(fd.c1, scale(fd.rank, td1));
  const Rational prod2 = fd.ch2 + geo.dot(fd.c1, td1) + fd.rank * td2;

  ChernVector out = model.zero();
  out.ch1 = scale(fd.rank, model.exceptional_divisor().coords);
  for (std::size_t i = 0; i < prod1.size(); ++i) out.ch2 = add(out.ch2, scale(prod1[i], geo.push[i].coords));
  out.ch3 = prod2;

  GrrTrace trace;
  trace.steps.push_back({"ch(F)", fd.rank, fd.c1, fd.ch2});
  trace.steps.push_back({"td(O_D(D))^-1", 1, td1, td2});
  trace.steps.push_back({"ch(F).td^-1", fd.rank, prod1, prod2});
  trace.result = out;
  return trace;
}

ChernVector grr_push_divisor(const ContractionModel& model, const DivisorSheafData& fd) {
  return grr_push_divisor_traced(model, fd).result;
}

ChernVector grr_push_fiber_line(const ContractionModel& model, long k) {
  // td(N)^{-1} = 1 + pt/2 for N = O + O(-1) (fiber) or N = O(-1) (curve on a surface).
  const Rational top = Rational(k) + Rational(1, 2);
  if (model.kind() == ContractionKind::TI) {
    ChernVector v = model.zero();
    v.ch2[model.curve_index("L")] = 1;
    v.ch3 = top;
    return v;
  }
  if (model.kind() == ContractionKind::SurfaceBlowdown) return model.surface_class(0, 0, 1, top);
  fail(ErrorCode::Precondition, "precondition violated: exceptional line pushforward needs kind TI or surface, got " +
                                    std::string(to_string(model.kind())));
}

ChernVector dual(const ChernVector& v) {
  ChernVector out = v;
  out.ch1 = scale(-1, v.ch1);
  if (v.dim == 3) out.ch3 = -v.ch3;
  return out;
}

Rational euler_pairing_surface(const ContractionModel& model, const ChernVector& v, const ChernVector& w,
                               const std::optional<CanonicalData>& canonical) {
  if (!is_surface(model.kind())) fail(ErrorCode::Precondition, "precondition violated: Euler pairing needs a surface model");
  model.check(v);
  model.check(w);
  const ChernVector vd = dual(v);
  const DivisorClass v1{vd.ch1}, w1{w.ch1};
  // (ch(v)^vee ch(w)) in degrees 0, 1, 2.
  const Rational p0 = vd.ch0 * w.ch0;
  const DivisorClass p1{add(scale(vd.ch0, w.ch1), scale(w.ch0, vd.ch1))};
  const Rational p2 = vd.ch0 * w.top() + w.ch0 * vd.top() + model.intersect(v1, w1);

  // K_X . (x f*w + a C) = x (K_Y.w) - a, because C.f*w = 0 and K_X.C = C^2 = -1.
  const Rational& x = p1.coords[0];
  const Rational& a = p1.coords[1];
  if (!canonical && (x != 0 || p0 != 0)) {
    fail(ErrorCode::Precondition,
         "precondition violated: canonical data (K_Y.w, chi(O_X)) required because the pairing has K_Y-dependent terms");
  }
  const Rational k_dot = (x != 0 ? x * canonical->k_y_dot_omega : Rational(0)) - a;
  const Rational chi_o = p0 != 0 ? Rational(p0 * canonical->chi_o_x) : Rational(0);
  return p2 - k_dot / 2 + chi_o;
}

}  // namespace bstab
