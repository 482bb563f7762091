#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace zroot2 {

// Arbitrary-precision scalars. All arithmetic in this library is exact;
// there are no floating-point code paths.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// Canonical "p" or "p/q" form (reduced, positive denominator).
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("integer string is empty");
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
}

// Parses "p" or "p/q" exactly; result is canonicalized with positive
// denominator. Rejects q = 0.
inline Rat rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den;
  if (slash == std::string::npos) {
    num = int_from_string(s);
    den = 1;
  } else {
    num = int_from_string(s.substr(0, slash));
    den = int_from_string(s.substr(slash + 1));
  }
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// 2-adic valuation of a rational integer; nullopt encodes +infinity (z = 0).
inline std::optional<unsigned long> two_adic_valuation(const Int& z) {
  if (z == 0) return std::nullopt;
  return mpz_scan1(z.get_mpz_t(), 0);
}

}  // namespace zroot2
