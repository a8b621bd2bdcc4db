#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tdhom/error.hpp"

namespace tdhom {

/// Exact rational number; mpq_class keeps values canonical after arithmetic.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q" (optional leading '-') into a canonical rational.
inline Scalar parse_scalar(std::string_view text) {
  auto bad = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto num = text.substr(0, slash);
  if (!digits_ok(num, true)) throw bad();
  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!digits_ok(den, false)) throw bad();
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" for integers, otherwise "p/q".
inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace tdhom
