// bstab: command-line front end over the C library.
//
// Every subcommand prints one JSON document (or a flattened key/value view of
// it). Exit status: 0 ok, 1 input or precondition error, 2 when a computed
// b-range disagrees with the published reference.

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bstab.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDiscrepancy = 2;

struct CliFailure {
  std::string message;
};

struct Options {
  std::string kind = "surface";
  std::string w = "1";
  std::optional<std::string> omega_dd;
  std::optional<std::string> d_cube;
  std::optional<std::string> b;
  std::optional<std::string> t;
  std::vector<std::string> classes;
  std::string target;
  std::optional<std::string> object;
  std::optional<std::string> c_omega;
  std::optional<std::string> threshold;
  std::optional<std::string> k_omega;
  std::optional<std::string> chi_o;
  long bound_scale = 1;
  std::string format = "json";
};

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

void check(bstab_status st) {
  if (st != BSTAB_OK) throw CliFailure{bstab_last_error()};
}

using ModelPtr = std::unique_ptr<bstab_model, decltype(&bstab_model_destroy)>;

ModelPtr open_model(const Options& o) {
  bstab_kind kind;
  check(bstab_kind_from_string(o.kind.c_str(), &kind));
  bstab_model* m = nullptr;
  if (kind == BSTAB_KIND_TI) {
    check(bstab_model_create_type_i(o.w.c_str(), opt(o.omega_dd), opt(o.d_cube), &m));
  } else {
    if (o.omega_dd || o.d_cube) throw CliFailure{"--omega-dd and --d-cube only apply to --kind TI"};
    check(bstab_model_create(kind, o.w.c_str(), &m));
  }
  return ModelPtr(m, &bstab_model_destroy);
}

// Takes ownership of a library string and parses it.
json take(char* text) {
  std::unique_ptr<char, decltype(&bstab_string_free)> owned(text, &bstab_string_free);
  return json::parse(owned.get());
}

const std::string& class_arg(const Options& o, std::size_t i, const char* sub) {
  if (o.classes.size() <= i) {
    throw CliFailure{std::string(sub) + " needs " + std::to_string(i + 1) + " --class argument(s)"};
  }
  return o.classes[i];
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_structured() ? j.dump() : scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    return;
  }
  std::size_t width = 3;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

int run_subcommand(const std::string& name, const Options& o) {
  const ModelPtr model = open_model(o);
  bstab_model* m = model.get();
  char* out = nullptr;
  int exit_code = kExitOk;
  json result;

  if (name == "model") {
    check(bstab_model_json(m, &out));
    result = take(out);
  } else if (name == "catalog") {
    check(bstab_catalog_json(m, &out));
    result = take(out);
  } else if (name == "brange") {
    int discrepancy = 0;
    check(bstab_brange_json(m, &out, &discrepancy));
    result = take(out);
    if (discrepancy) exit_code = kExitDiscrepancy;
  } else if (name == "twist") {
    check(bstab_twist_json(m, class_arg(o, 0, "twist").c_str(), opt(o.b), &out));
    result = take(out);
  } else if (name == "charge") {
    check(bstab_charge_json(m, class_arg(o, 0, "charge").c_str(), opt(o.b), &out));
    result = take(out);
  } else if (name == "slope") {
    check(bstab_slope_json(m, class_arg(o, 0, "slope").c_str(), opt(o.b), &out));
    result = take(out);
  } else if (name == "bg") {
    check(bstab_bg_json(m, class_arg(o, 0, "bg").c_str(), opt(o.b), opt(o.c_omega), opt(o.threshold), &out));
    result = take(out);
  } else if (name == "norm") {
    check(bstab_norm_json(m, class_arg(o, 0, "norm").c_str(), &out));
    result = take(out);
  } else if (name == "chi") {
    check(bstab_chi_json(m, class_arg(o, 0, "chi").c_str(), class_arg(o, 1, "chi").c_str(), opt(o.k_omega),
                         opt(o.chi_o), &out));
    result = take(out);
  } else if (name == "sequiv") {
    const std::string& target = o.target.empty() ? class_arg(o, 0, "sequiv") : o.target;
    check(bstab_sequiv_json(m, target.c_str(), opt(o.b), o.bound_scale, &out));
    result = take(out);
  } else if (name == "wall") {
    // Without classes the wall is taken between the two exceptional simples.
    const std::string a = o.classes.size() > 0 ? o.classes[0] : "O_C";
    const std::string b = o.classes.size() > 1 ? o.classes[1] : "O_C(-1)[1]";
    if (o.classes.size() == 1 || o.classes.size() > 2) throw CliFailure{"wall takes zero or two --class arguments"};
    check(bstab_wall_json(m, a.c_str(), b.c_str(), opt(o.t), &out));
    result = take(out);
    if (o.t || o.object) {
      check(bstab_verdict_json(m, opt(o.object), opt(o.t), &out));
      result["verdicts"] = take(out)["verdicts"];
    }
  } else {
    throw CliFailure{"unknown subcommand \"" + name + "\""};
  }
  print(result, o.format);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact numerics for stability conditions on extremal contractions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--kind", o.kind, "contraction kind: surface, TI, TII, TIII, TIV, TV");
  app.add_option("--w", o.w, "w^2 (surface) or w^3 (3-fold), a positive rational");
  app.add_option("--omega-dd", o.omega_dd, "TI only: f*w.D^2");
  app.add_option("--d-cube", o.d_cube, "TI only: D^3");
  app.add_option("--b", o.b, "twist parameter b (B = bD)");
  app.add_option("--t", o.t, "wall family parameter t");
  // JSON arrays must reach the library intact, so no bracket expansion.
  app.add_option("--class", o.classes, "class as JSON or a catalog name; repeatable")->allow_extra_args(false);
  app.add_option("--target", o.target, "target class for sequiv");
  app.add_option("--object", o.object, "wall: O_x_on_C, Lf_O_0 or OC_plus_OCm1");
  app.add_option("--c-omega", o.c_omega, "bg (surface): strong-form constant, default 0");
  app.add_option("--threshold", o.threshold, "bg (surface): 0 or -1, default -1");
  app.add_option("--k-omega", o.k_omega, "chi: K_Y.w");
  app.add_option("--chi-o", o.chi_o, "chi: chi(O_X)");
  app.add_option("--bound-scale", o.bound_scale, "sequiv: multiply enumeration bounds")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));

  const std::vector<std::pair<const char*, const char*>> subcommands = {
      {"model", "intersection data of the model"},
      {"catalog", "simple classes and their derivations"},
      {"brange", "b-range where every simple has positive twisted ch3"},
      {"twist", "e^{-bD} ch"},
      {"charge", "central charge of a class"},
      {"slope", "slope, tilt slope and trichotomy case"},
      {"bg", "Bogomolov-Gieseker margins"},
      {"norm", "support-property norm and ratio"},
      {"chi", "Euler pairing of two surface classes"},
      {"sequiv", "Jordan-Holder decompositions of a class"},
      {"wall", "wall between two classes, phase order and verdicts"},
  };
  for (const auto& [name, help] : subcommands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return run_subcommand(app.get_subcommands().front()->get_name(), o);
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  }
}
