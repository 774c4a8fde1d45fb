#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q"; whitespace is not accepted. Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// Componentwise helpers for coordinate vectors.
using Coords = std::vector<Rational>;

Coords zeros(std::size_t n);
Coords add(std::span<const Rational> a, std::span<const Rational> b);
Coords scale(const Rational& s, std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);

}  // namespace bstab
