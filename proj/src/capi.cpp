#include "bstab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "bstab/error.hpp"
#include "bstab/json_io.hpp"

struct bstab_model {
  bstab::ContractionModel model;
};

namespace {

using bstab::io::json;
using bstab::io::to_json;

thread_local std::string g_last_error;

bstab_status to_status(bstab::ErrorCode code) {
  switch (code) {
    case bstab::ErrorCode::InvalidArgument: return BSTAB_ERR_INVALID_ARGUMENT;
    case bstab::ErrorCode::Parse: return BSTAB_ERR_PARSE;
    case bstab::ErrorCode::Precondition: return BSTAB_ERR_PRECONDITION;
  }
  return BSTAB_ERR_INTERNAL;
}

struct NullArgument {
  std::string what;
};

template <class F>
bstab_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return BSTAB_OK;
  } catch (const NullArgument& e) {
    g_last_error = e.what;
    return BSTAB_ERR_NULL_POINTER;
  } catch (const bstab::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return BSTAB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal error";
    return BSTAB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw NullArgument{std::string(what) + " must not be NULL"};
}

char* emit(const json& j) {
  const std::string text = j.dump(2);
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

bstab::Rational rational_arg(const char* text, const char* fallback) {
  return bstab::parse_rational(text != nullptr ? text : fallback);
}

const bstab::ContractionModel& model_of(const bstab_model* m) {
  require(m, "model");
  return m->model;
}

bstab::ContractionKind kind_of(bstab_kind k) {
  switch (k) {
    case BSTAB_KIND_SURFACE: return bstab::ContractionKind::SurfaceBlowdown;
    case BSTAB_KIND_TI: return bstab::ContractionKind::TI;
    case BSTAB_KIND_TII: return bstab::ContractionKind::TII;
    case BSTAB_KIND_TIII: return bstab::ContractionKind::TIII;
    case BSTAB_KIND_TIV: return bstab::ContractionKind::TIV;
    case BSTAB_KIND_TV: return bstab::ContractionKind::TV;
  }
  throw bstab::Error(bstab::ErrorCode::InvalidArgument, "unknown bstab_kind value " + std::to_string(static_cast<int>(k)));
}

bstab_kind kind_to_c(bstab::ContractionKind k) {
  return static_cast<bstab_kind>(static_cast<int>(k));
}

// Slopes that fail their precondition are reported as null rather than aborting the whole query.
template <class F>
json or_null(F&& f) {
  try {
    return f();
  } catch (const bstab::Error& e) {
    if (e.code() != bstab::ErrorCode::Precondition) throw;
    return nullptr;
  }
}

}  // namespace

extern "C" {

const char* bstab_version(void) { return "0.1.0"; }

const char* bstab_last_error(void) { return g_last_error.c_str(); }

void bstab_string_free(char* s) { std::free(s); }

bstab_status bstab_kind_from_string(const char* text, bstab_kind* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = kind_to_c(bstab::parse_kind(text));
  });
}

bstab_status bstab_model_create(bstab_kind kind, const char* w, bstab_model** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto model = bstab::ContractionModel::make(kind_of(kind), rational_arg(w, "1"));
    *out = new bstab_model{std::move(model)};
  });
}

bstab_status bstab_model_create_type_i(const char* w, const char* omega_dd, const char* d_cube, bstab_model** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const bstab::ContractionModel::TypeIParams params{rational_arg(omega_dd, "0"), rational_arg(d_cube, "0")};
    auto model = bstab::ContractionModel::make_type_i(rational_arg(w, "1"), params);
    *out = new bstab_model{std::move(model)};
  });
}

void bstab_model_destroy(bstab_model* model) { delete model; }

bstab_status bstab_model_kind(const bstab_model* model, bstab_kind* out) {
  return guarded([&] {
    require(out, "out");
    *out = kind_to_c(model_of(model).kind());
  });
}

bstab_status bstab_model_json(const bstab_model* model, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = emit(to_json(model_of(model)));
  });
}

bstab_status bstab_catalog_json(const bstab_model* model, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    const auto& m = model_of(model);
    json simples = json::array();
    for (const auto& s : bstab::simples(m)) {
      json entry = to_json(m, s);
      if (bstab::is_threefold(m.kind())) entry["twisted_ch3"] = to_json(bstab::twisted_ch3_poly(m, s));
      simples.push_back(entry);
    }
    json derivations = json::array();
    if (bstab::contracts_to_point(m.kind())) {
      for (const auto& block : bstab::divisor_building_blocks(m)) {
        derivations.push_back({{"sheaf", block.name}, {"grr", to_json(m, bstab::grr_push_divisor_traced(m, block.sheaf))}});
      }
    }
    *out_json = emit({{"kind", std::string(bstab::to_string(m.kind()))}, {"simples", simples}, {"derivations", derivations}});
  });
}

bstab_status bstab_brange_json(const bstab_model* model, char** out_json, int* discrepancy) {
  return guarded([&] {
    require(out_json, "out_json");
    const auto& m = model_of(model);
    if (!bstab::is_threefold(m.kind())) {
      throw bstab::Error(bstab::ErrorCode::Precondition, "precondition violated: brange needs a 3-fold model (surfaces use B = 0)");
    }
    const bstab::RangeCrossCheck check = bstab::cross_check_range(m);
    const bool flagged = check.reference.has_value() && !check.matches;
    json sample = check.derived.empty() ? json(nullptr) : to_json(check.derived.simplest_rational());
    *out_json = emit({{"kind", std::string(bstab::to_string(m.kind()))},
                      {"range", to_json(check.derived)},
                      {"sample_b", sample},
                      {"cross_check", to_json(check)},
                      {"discrepancy", flagged}});
    if (discrepancy != nullptr) *discrepancy = flagged ? 1 : 0;
  });
}

bstab_status bstab_twist_json(const bstab_model* model, const char* cls, const char* b, char** out_json) {
  return guarded([&] {
    require(cls, "cls");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, cls);
    const bstab::Rational bb = rational_arg(b, "0");
    *out_json = emit({{"b", to_json(bb)}, {"input", to_json(m, v)}, {"twisted", to_json(m, bstab::twist(m, v, bb))}});
  });
}

bstab_status bstab_charge_json(const bstab_model* model, const char* cls, const char* b, char** out_json) {
  return guarded([&] {
    require(cls, "cls");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, cls);
    const bstab::Rational bb = rational_arg(b, "0");
    const bstab::ChargeValue z = bstab::is_surface(m.kind()) ? bstab::z_surface(m, v) : bstab::z_threefold(m, bb, v);
    json out = {{"class", to_json(m, v)}, {"charge", to_json(z)}};
    if (bstab::is_threefold(m.kind())) out["b"] = to_json(bb);
    out["phase_half"] = (z.re == 0 && z.im == 0) ? json(nullptr) : json(bstab::PhaseKey(z.re, z.im).half());
    *out_json = emit(out);
  });
}

bstab_status bstab_slope_json(const bstab_model* model, const char* cls, const char* b, char** out_json) {
  return guarded([&] {
    require(cls, "cls");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, cls);
    json out = {{"class", to_json(m, v)}, {"mu", or_null([&] { return to_json(bstab::mu(m, v)); })}};
    if (bstab::is_threefold(m.kind())) {
      const bstab::Rational bb = rational_arg(b, "0");
      out["b"] = to_json(bb);
      out["nu"] = or_null([&]() -> json {
        const bstab::TiltSlope t = bstab::nu(m, bb, v);
        return {{"slope", to_json(t.slope)}, {"numerator", to_json(t.numerator)}, {"denominator", to_json(t.denominator)}};
      });
      out["trichotomy"] = bstab::to_string(bstab::trichotomy(m, bb, v));
    }
    *out_json = emit(out);
  });
}

bstab_status bstab_bg_json(const bstab_model* model, const char* cls, const char* b, const char* c_omega,
                           const char* threshold, char** out_json) {
  return guarded([&] {
    require(cls, "cls");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, cls);
    json out = {{"class", to_json(m, v)}, {"discriminant", to_json(bstab::bg_discriminant(m, v))}};
    if (bstab::is_surface(m.kind())) {
      const bstab::Rational c = rational_arg(c_omega, "0");
      const bstab::Rational th = rational_arg(threshold, "-1");
      out["weak"] = to_json(bstab::bg_weak_surface(m, v));
      out["strong"] = to_json(bstab::bg_strong_margin(m, v, c, th));
      out["c_omega"] = to_json(c);
      out["threshold"] = to_json(th);
    } else {
      const bstab::Rational bb = rational_arg(b, "0");
      out["b"] = to_json(bb);
      out["threefold"] = or_null([&] { return to_json(bstab::bg_threefold_margin(m, bb, v)); });
    }
    *out_json = emit(out);
  });
}

bstab_status bstab_norm_json(const bstab_model* model, const char* cls, char** out_json) {
  return guarded([&] {
    require(cls, "cls");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, cls);
    *out_json = emit({{"class", to_json(m, v)},
                      {"norm", to_json(bstab::support_norm(m, v))},
                      {"ratio_sq", or_null([&] { return to_json(bstab::support_ratio_sq(m, v)); })}});
  });
}

bstab_status bstab_chi_json(const bstab_model* model, const char* v, const char* w, const char* k_y_omega,
                            const char* chi_o, char** out_json) {
  return guarded([&] {
    require(v, "v");
    require(w, "w");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    std::optional<bstab::CanonicalData> canonical;
    if (k_y_omega != nullptr || chi_o != nullptr) canonical = bstab::CanonicalData{rational_arg(k_y_omega, "0"), rational_arg(chi_o, "0")};
    const bstab::ChernVector a = bstab::io::parse_class(m, v);
    const bstab::ChernVector c = bstab::io::parse_class(m, w);
    *out_json = emit({{"v", to_json(m, a)}, {"w", to_json(m, c)}, {"chi", to_json(bstab::euler_pairing_surface(m, a, c, canonical))}});
  });
}

bstab_status bstab_sequiv_json(const bstab_model* model, const char* target, const char* b, long bound_scale,
                               char** out_json) {
  return guarded([&] {
    require(target, "target");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector v = bstab::io::parse_class(m, target);
    bstab::Rational bb = 0;
    if (b != nullptr) {
      bb = bstab::parse_rational(b);
    } else if (bstab::is_threefold(m.kind())) {
      const bstab::BRange range = bstab::solve_b_range(m);
      if (range.empty()) throw bstab::Error(bstab::ErrorCode::Precondition, "precondition violated: empty b-range");
      bb = range.simplest_rational();
    }
    const bstab::DecomposeResult r = bstab::decompose(m, v, bb, bound_scale);
    json sols = json::array();
    for (const auto& s : r.solutions) sols.push_back(to_json(s));
    json order = json::array();
    for (const auto& s : bstab::simples(m)) order.push_back(s.name);
    *out_json = emit({{"kind", std::string(bstab::to_string(m.kind()))},
                      {"b", to_json(bb)},
                      {"target", to_json(m, v)},
                      {"catalog_order", order},
                      {"solutions", sols},
                      {"reason", bstab::to_string(r.reason)},
                      {"budget", to_json(r.budget)},
                      {"bounds", r.bounds}});
  });
}

bstab_status bstab_wall_json(const bstab_model* model, const char* cls_a, const char* cls_b, const char* t,
                             char** out_json) {
  return guarded([&] {
    require(cls_a, "cls_a");
    require(cls_b, "cls_b");
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::ChernVector a = bstab::io::parse_class(m, cls_a);
    const bstab::ChernVector c = bstab::io::parse_class(m, cls_b);
    const bstab::WallSolution wall = bstab::solve_wall_param(m, a, c);
    json roots = json::array();
    for (const auto& r : wall.roots) roots.push_back(to_json(r));
    json out = {{"a", to_json(m, a)},
                {"b", to_json(m, c)},
                {"wall", {{"always_aligned", wall.always_aligned}, {"roots", roots}, {"wall_function_s", to_json(wall.wall_function)}}}};
    if (t != nullptr) {
      const bstab::Rational tt = bstab::parse_rational(t);
      const auto za = bstab::family_charge(m, a, tt);
      const auto zb = bstab::family_charge(m, c, tt);
      static constexpr const char* kOrder[] = {"Less", "Equal", "Greater"};
      out["t"] = to_json(tt);
      out["charge_a_eps"] = {{"re", to_json(za.re)}, {"im", to_json(za.im)}};
      out["charge_b_eps"] = {{"re", to_json(zb.re)}, {"im", to_json(zb.im)}};
      out["order"] = kOrder[static_cast<int>(bstab::phase_order_family(m, a, c, tt))];
    }
    *out_json = emit(out);
  });
}

bstab_status bstab_verdict_json(const bstab_model* model, const char* object, const char* t, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    const auto& m = model_of(model);
    const bstab::Rational tt = rational_arg(t, "0");
    json verdicts = json::object();
    for (auto name : {bstab::ModuliObjectName::OxOnC, bstab::ModuliObjectName::LfO0, bstab::ModuliObjectName::OCPlusOCm1}) {
      if (object != nullptr && bstab::parse_moduli_object(object) != name) continue;
      const auto obj = bstab::make_moduli_object(m, name);
      verdicts[bstab::to_string(name)] = bstab::to_string(bstab::stability_verdict(m, obj, tt));
    }
    *out_json = emit({{"t", to_json(tt)}, {"verdicts", verdicts}});
  });
}

}  // extern "C"
