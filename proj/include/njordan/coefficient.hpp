#ifndef NJORDAN_COEFFICIENT_HPP
#define NJORDAN_COEFFICIENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace njordan {

/// Exact rational scalar. mpq_class keeps values in lowest terms as long as
/// every construction from a numerator/denominator pair is canonicalized,
/// which make_rational and parse_rational do.
using Coefficient = mpq_class;

inline Coefficient make_rational(long num, long den = 1) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Coefficient q(num, den);
  q.canonicalize();
  return q;
}

/// `3/2`, `-1`, `0`.
inline std::string to_string(const Coefficient& q) { return q.get_str(); }

/// Accepts `7`, `-3/4`, `+2`.
inline Coefficient parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw precondition_error("empty rational literal");
  Coefficient q;
  if (q.set_str(s, 10) != 0)
    throw precondition_error("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw precondition_error("rational with zero denominator '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline Coefficient factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Coefficient(f);
}

} // namespace njordan

#endif // NJORDAN_COEFFICIENT_HPP
