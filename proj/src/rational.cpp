#include "bstab/rational.hpp"

#include <algorithm>
#include <cctype>

#include "bstab/error.hpp"

namespace bstab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-' || den.front() == '+'))) {
    fail(ErrorCode::InvalidArgument, "not a rational number: \"" + std::string(text) + "\" (expected p or p/q)");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer n(strip_plus(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Coords zeros(std::size_t n) { return Coords(n, Rational(0)); }

Coords add(std::span<const Rational> a, std::span<const Rational> b) {
  Coords out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coords scale(const Rational& s, std::span<const Rational> a) {
  Coords out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(s * x);
  return out;
}

bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace bstab
