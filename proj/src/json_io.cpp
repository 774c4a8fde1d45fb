#include "bstab/json_io.hpp"

#include <algorithm>

#include "bstab/error.hpp"

namespace bstab::io {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  fail(ErrorCode::Parse, "expected a rational string \"p/q\" or an integer, got " + j.dump());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const ContractionModel& model) {
  json pairings = json::object();
  json dsq = json::object();
  json out = {{"kind", std::string(to_string(model.kind()))}, {"w", to_json(model.w())}};
  out["divisor_basis"] = model.divisor_labels();
  if (model.dimension() == 2) {
    const auto& labels = model.divisor_labels();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = i; j < 2; ++j) {
        DivisorClass a{zeros(2)}, b{zeros(2)};
        a.coords[i] = 1;
        b.coords[j] = 1;
        pairings[labels[i] + "." + labels[j]] = to_json(model.intersect(a, b));
      }
    out["d_cube"] = to_json(model.d_cube());
  } else {
    out["curve_basis"] = model.curve_labels();
    for (std::size_t i = 0; i < model.divisor_labels().size(); ++i) {
      DivisorClass d{zeros(2)};
      d.coords[i] = 1;
      for (std::size_t j = 0; j < model.curve_labels().size(); ++j) {
        pairings[model.divisor_labels()[i] + "." + model.curve_labels()[j]] = to_json(model.pair_curve_divisor(d, model.curve(j)));
      }
    }
    const CurveClass dd = model.dsq_curve();
    for (std::size_t j = 0; j < dd.coords.size(); ++j) dsq[model.curve_labels()[j]] = to_json(dd.coords[j]);
    out["d_cube"] = to_json(model.d_cube());
    out["dsq_curve"] = dsq;
  }
  out["pairings"] = pairings;
  return out;
}

json to_json(const ContractionModel& model, const ChernVector& v) {
  model.check(v);
  json out = json::object();
  out["ch0"] = to_json(v.ch0);
  json ch1 = json::object();
  for (std::size_t i = 0; i < v.ch1.size(); ++i) ch1[model.divisor_labels()[i]] = to_json(v.ch1[i]);
  out["ch1"] = ch1;
  if (v.dim == 2) {
    out["ch2"] = to_json(v.ch2.front());
  } else {
    json ch2 = json::object();
    for (std::size_t i = 0; i < v.ch2.size(); ++i) ch2[model.curve_labels()[i]] = to_json(v.ch2[i]);
    out["ch2"] = ch2;
    out["ch3"] = to_json(v.ch3);
  }
  return out;
}

namespace {

Coords labelled_coords(const json& j, const std::vector<std::string>& labels, const char* what) {
  Coords out = zeros(labels.size());
  if (j.is_array()) {
    if (j.size() != labels.size()) fail(ErrorCode::Parse, std::string(what) + " array has the wrong length for this model");
    for (std::size_t i = 0; i < labels.size(); ++i) out[i] = rational_from_json(j[i]);
    return out;
  }
  if (!j.is_object()) fail(ErrorCode::Parse, std::string(what) + " must be an object keyed by basis label");
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end()) fail(ErrorCode::Parse, std::string("unknown ") + what + " label \"" + key + "\"");
    out[static_cast<std::size_t>(it - labels.begin())] = rational_from_json(value);
  }
  return out;
}

}  // namespace

ChernVector class_from_json(const ContractionModel& model, const json& j) {
  ChernVector v = model.zero();
  const bool surface = model.dimension() == 2;
  if (j.is_array()) {
    const std::size_t expected = surface ? 3 : 4;
    if (j.size() != expected) fail(ErrorCode::Parse, "class array must have " + std::to_string(expected) + " entries for this model");
    v.ch0 = rational_from_json(j[0]);
    v.ch1 = labelled_coords(j[1], model.divisor_labels(), "ch1");
    if (surface) {
      v.ch2 = {rational_from_json(j[2])};
    } else {
      v.ch2 = labelled_coords(j[2], model.curve_labels(), "ch2");
      v.ch3 = rational_from_json(j[3]);
    }
    return v;
  }
  if (!j.is_object()) fail(ErrorCode::Parse, "class must be a JSON object or array");
  for (const auto& [key, value] : j.items()) {
    if (key == "ch0") v.ch0 = rational_from_json(value);
    else if (key == "ch1") v.ch1 = labelled_coords(value, model.divisor_labels(), "ch1");
    else if (key == "ch2") v.ch2 = surface ? Coords{rational_from_json(value)} : labelled_coords(value, model.curve_labels(), "ch2");
    else if (key == "ch3" && !surface) v.ch3 = rational_from_json(value);
    else fail(ErrorCode::Parse, "unexpected class field \"" + key + "\"");
  }
  return v;
}

ChernVector parse_class(const ContractionModel& model, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
    return class_from_json(model, parse_json(text));
  }
  for (const auto& s : simples(model))
    if (s.name == text) return s.shifted();
  fail(ErrorCode::Parse, "class \"" + std::string(text) + "\" is neither JSON nor a catalog name for kind " +
                             std::string(to_string(model.kind())));
}

json to_json(const QuadExtNumber& x) {
  return {{"p", to_json(x.p())}, {"q", to_json(x.q())}, {"d", x.d().get_si()}, {"approx", x.approx(12)}, {"text", x.to_string()}};
}

json to_json(const Bound& b) {
  switch (b.type) {
    case Bound::Type::NegInf: return "-inf";
    case Bound::Type::PosInf: return "+inf";
    case Bound::Type::Finite: break;
  }
  return to_json(b.value);
}

json to_json(const BRange& r) {
  json out = json::array();
  for (const auto& iv : r.intervals()) out.push_back({{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}});
  return out;
}

json to_json(const QuadPoly& q) { return {{"q2", to_json(q.q2)}, {"q1", to_json(q.q1)}, {"q0", to_json(q.q0)}}; }

json to_json(const ContractionModel& model, const SimpleClass& s) {
  return {{"name", s.name}, {"chern", to_json(model, s.chern)}, {"shift", s.shift}, {"shifted", to_json(model, s.shifted())},
          {"is_point", s.is_point}};
}

json to_json(const ChargeValue& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

json to_json(const BGReport& r) { return {{"margin", to_json(r.margin)}, {"holds", r.holds}}; }

json to_json(const ExtendedSlope& s) { return s.is_infinite() ? json("+inf") : to_json(s.value()); }

json to_json(const MultiplicityVector& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

json to_json(const EpsPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const ContractionModel& model, const GrrTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json d1 = json::array();
    for (const auto& c : s.degree1) d1.push_back(to_json(c));
    steps.push_back({{"label", s.label}, {"degree0", to_json(s.degree0)}, {"degree1", d1}, {"degree2", to_json(s.degree2)}});
  }
  return {{"steps", steps}, {"result", to_json(model, trace.result)}};
}

json to_json(const RangeCrossCheck& check) {
  json out = {{"derived", to_json(check.derived)}, {"matches_reference", check.matches}};
  out["reference"] = check.reference ? to_json(*check.reference) : json(nullptr);
  json mismatches = json::array();
  for (const auto& m : check.mismatches) {
    mismatches.push_back({{"reference_interval", m.reference_interval}, {"endpoint", m.upper ? "upper" : "lower"},
                          {"derived", to_json(m.derived)}, {"reference", to_json(m.reference)}});
  }
  out["mismatches"] = mismatches;
  json extra = json::array();
  for (const auto& iv : check.unreferenced) extra.push_back({{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}});
  out["unreferenced_intervals"] = extra;
  out["notes"] = check.notes;
  return out;
}

}  // namespace bstab::io
