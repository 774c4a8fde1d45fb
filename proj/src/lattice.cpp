#include "bstab/lattice.hpp"

#include <algorithm>

#include "bstab/error.hpp"

namespace bstab {

std::string_view to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::SurfaceBlowdown: return "surface";
    case ContractionKind::TI: return "TI";
    case ContractionKind::TII: return "TII";
    case ContractionKind::TIII: return "TIII";
    case ContractionKind::TIV: return "TIV";
    case ContractionKind::TV: return "TV";
  }
  return "?";
}

ContractionKind parse_kind(std::string_view text) {
  if (text == "surface" || text == "SurfaceBlowdown") return ContractionKind::SurfaceBlowdown;
  if (text == "TI" || text == "I") return ContractionKind::TI;
  if (text == "TII" || text == "II") return ContractionKind::TII;
  if (text == "TIII" || text == "III") return ContractionKind::TIII;
  if (text == "TIV" || text == "IV") return ContractionKind::TIV;
  if (text == "TV" || text == "V") return ContractionKind::TV;
  fail(ErrorCode::InvalidArgument,
       "unknown contraction kind \"" + std::string(text) + "\" (expected surface, TI, TII, TIII, TIV or TV)");
}

ChernVector& ChernVector::operator+=(const ChernVector& o) {
  if (dim != o.dim || ch1.size() != o.ch1.size() || ch2.size() != o.ch2.size()) {
    fail(ErrorCode::InvalidArgument, "cannot add Chern vectors of different shapes");
  }
  ch0 += o.ch0;
  for (std::size_t i = 0; i < ch1.size(); ++i) ch1[i] += o.ch1[i];
  for (std::size_t i = 0; i < ch2.size(); ++i) ch2[i] += o.ch2[i];
  ch3 += o.ch3;
  return *this;
}

ChernVector ChernVector::scaled(const Rational& s) const {
  ChernVector out{dim, s * ch0, scale(s, ch1), scale(s, ch2), s * ch3};
  return out;
}

bool ChernVector::operator==(const ChernVector& o) const {
  return dim == o.dim && ch0 == o.ch0 && ch1 == o.ch1 && ch2 == o.ch2 && ch3 == o.ch3;
}

ChernVector cv_shift(const ChernVector& v, long n) { return (n % 2 == 0) ? v : v.scaled(-1); }

namespace {

struct ExceptionalData {
  std::vector<std::string> curves;
  Coords d_dot_curve;  // D . (exceptional curve)
  Coords dsq;          // D^2 in exceptional curve coordinates
};

// (D, O_D(D)) is (P^2, O(-1)), (P^1xP^1, O(-1,-1)), (P^2, O(-2)), (quadric cone, O(-1)).
// D^2 = i_*c1(O_D(D)) and D.gamma = deg(O_D(D)|gamma).
ExceptionalData point_contraction_data(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::TII: return {{"l"}, {-1}, {-1}};
    case ContractionKind::TIII: return {{"C1", "C2"}, {-1, -1}, {-1, -1}};
    case ContractionKind::TIV: return {{"l"}, {-2}, {-2}};
    case ContractionKind::TV: return {{"C"}, {-1}, {-2}};
    default: break;
  }
  fail(ErrorCode::InvalidArgument, "not a point contraction");
}

}  // namespace

ContractionModel ContractionModel::make(ContractionKind kind, const Rational& w) {
  if (kind == ContractionKind::TI) return make_type_i(w, TypeIParams{});
  if (w <= 0) fail(ErrorCode::Precondition, "precondition violated: w must be positive (got " + to_string(w) + ")");

  ContractionModel m;
  m.kind_ = kind;
  m.w_ = w;
  if (is_surface(kind)) {
    m.divisor_labels_ = {"f*w", "C"};
    m.form_ = {{w, 0}, {0, -1}};
    return m;
  }

  const ExceptionalData ex = point_contraction_data(kind);
  const std::size_t n = ex.curves.size();
  m.divisor_labels_ = {"f*w", "D"};
  m.curve_labels_ = ex.curves;
  m.curve_labels_.push_back("(f*w)^2");
  m.exceptional_curves_ = n;

  Coords fw_row = zeros(n + 1);
  fw_row[n] = w;
  Coords d_row(ex.d_dot_curve.begin(), ex.d_dot_curve.end());
  d_row.push_back(0);
  m.pairing_ = {fw_row, d_row};

  CurveClass fw_fw{zeros(n + 1)};
  fw_fw.coords[n] = 1;
  CurveClass fw_d{zeros(n + 1)};
  CurveClass d_d{ex.dsq};
  d_d.coords.push_back(0);
  m.product_ = {{fw_fw, fw_d}, {fw_d, d_d}};
  return m;
}

ContractionModel ContractionModel::make_type_i(const Rational& w, const TypeIParams& params) {
  if (w <= 0) fail(ErrorCode::Precondition, "precondition violated: w must be positive (got " + to_string(w) + ")");
  ContractionModel m;
  m.kind_ = ContractionKind::TI;
  m.w_ = w;
  m.divisor_labels_ = {"f*w", "D"};
  m.curve_labels_ = {"L", "D^2", "(f*w)^2"};
  m.exceptional_curves_ = 1;
  // Curves L (fiber), S = D^2, W = (f*w)^2.
  m.pairing_ = {{0, params.omega_dd, w}, {-1, params.d_cube, 0}};
  // f*w restricted to D is a sum of fibers: f*w . D = m L with D.(mL) = f*w.D^2.
  const CurveClass fw_fw{{0, 0, 1}};
  const CurveClass fw_d{{Rational(-params.omega_dd), 0, 0}};
  const CurveClass d_d{{0, 1, 0}};
  m.product_ = {{fw_fw, fw_d}, {fw_d, d_d}};
  return m;
}

DivisorClass ContractionModel::fstar_omega() const { return {{1, 0}}; }
DivisorClass ContractionModel::exceptional_divisor() const { return {{0, 1}}; }

CurveClass ContractionModel::curve(std::size_t index) const {
  if (index >= curve_labels_.size()) fail(ErrorCode::InvalidArgument, "curve index out of range");
  CurveClass c{zeros(curve_labels_.size())};
  c.coords[index] = 1;
  return c;
}

std::size_t ContractionModel::curve_index(std::string_view label) const {
  auto it = std::find(curve_labels_.begin(), curve_labels_.end(), label);
  if (it == curve_labels_.end()) {
    fail(ErrorCode::InvalidArgument, "unknown curve label \"" + std::string(label) + "\" for kind " +
                                         std::string(to_string(kind_)));
  }
  return static_cast<std::size_t>(it - curve_labels_.begin());
}

std::size_t ContractionModel::divisor_index(std::string_view label) const {
  auto it = std::find(divisor_labels_.begin(), divisor_labels_.end(), label);
  if (it == divisor_labels_.end()) {
    fail(ErrorCode::InvalidArgument, "unknown divisor label \"" + std::string(label) + "\" for kind " +
                                         std::string(to_string(kind_)));
  }
  return static_cast<std::size_t>(it - divisor_labels_.begin());
}

Rational ContractionModel::intersect(const DivisorClass& a, const DivisorClass& b) const {
  if (!is_surface(kind_)) fail(ErrorCode::Precondition, "precondition violated: divisor intersection form needs a surface model");
  check(a);
  check(b);
  Rational s = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += a.coords[i] * b.coords[j] * form_[i][j];
  return s;
}

Rational ContractionModel::pair_curve_divisor(const DivisorClass& d, const CurveClass& c) const {
  if (is_surface(kind_)) fail(ErrorCode::Precondition, "precondition violated: curve/divisor pairing needs a 3-fold model");
  check(d);
  check(c);
  Rational s = 0;
  for (std::size_t i = 0; i < d.coords.size(); ++i)
    for (std::size_t j = 0; j < c.coords.size(); ++j) s += d.coords[i] * c.coords[j] * pairing_[i][j];
  return s;
}

CurveClass ContractionModel::divisor_product(const DivisorClass& a, const DivisorClass& b) const {
  if (is_surface(kind_)) fail(ErrorCode::Precondition, "precondition violated: divisor product needs a 3-fold model");
  check(a);
  check(b);
  CurveClass out{zeros(curve_labels_.size())};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      const Rational coef = a.coords[i] * b.coords[k];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] += coef * product_[i][k].coords[j];
    }
  return out;
}

Rational ContractionModel::triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const {
  return pair_curve_divisor(a, divisor_product(b, c));
}

Rational ContractionModel::d_cube() const {
  const DivisorClass e = exceptional_divisor();
  return is_surface(kind_) ? intersect(e, e) : triple(e, e, e);
}

CurveClass ContractionModel::dsq_curve() const {
  const DivisorClass d = exceptional_divisor();
  return divisor_product(d, d);
}

ChernVector ContractionModel::zero() const {
  if (is_surface(kind_)) return ChernVector{2, 0, zeros(2), zeros(1), 0};
  return ChernVector{3, 0, zeros(2), zeros(curve_labels_.size()), 0};
}

ChernVector ContractionModel::point_class() const {
  ChernVector v = zero();
  v.top() = 1;
  return v;
}

ChernVector ContractionModel::surface_class(const Rational& ch0, const Rational& x, const Rational& a,
                                            const Rational& ch2) const {
  if (!is_surface(kind_)) fail(ErrorCode::InvalidArgument, "surface_class needs a surface model");
  return ChernVector{2, ch0, {x, a}, {ch2}, 0};
}

ChernVector ContractionModel::threefold_class(const Rational& ch0, const Rational& x, const Rational& y, Coords ch2,
                                              const Rational& ch3) const {
  if (is_surface(kind_)) fail(ErrorCode::InvalidArgument, "threefold_class needs a 3-fold model");
  ChernVector v{3, ch0, {x, y}, std::move(ch2), ch3};
  check(v);
  return v;
}

void ContractionModel::check(const ChernVector& v) const {
  const bool ok = is_surface(kind_) ? (v.dim == 2 && v.ch1.size() == 2 && v.ch2.size() == 1 && v.ch3 == 0)
                                    : (v.dim == 3 && v.ch1.size() == 2 && v.ch2.size() == curve_labels_.size());
  if (!ok) {
    fail(ErrorCode::InvalidArgument,
         "Chern vector shape does not match the " + std::string(to_string(kind_)) + " model bases");
  }
}

void ContractionModel::check(const DivisorClass& d) const {
  if (d.coords.size() != divisor_labels_.size()) fail(ErrorCode::InvalidArgument, "divisor coordinates do not match the model's divisor basis");
}

void ContractionModel::check(const CurveClass& c) const {
  if (c.coords.size() != curve_labels_.size()) fail(ErrorCode::InvalidArgument, "curve coordinates do not match the model's curve basis");
}

}  // namespace bstab
