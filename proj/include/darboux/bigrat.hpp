#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace darboux {

// Exact rational scalar. GMP keeps mpq values canonical after every
// arithmetic operation: gcd(|p|, q) = 1 and q > 0.
using BigRat = mpq_class;
using BigInt = mpz_class;

/// p/q in canonical form (q != 0).
inline BigRat make_rat(long p, long q) {
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument on
/// malformed input or a zero denominator.
BigRat parse_rat(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRat& value);

/// Nonnegative exact square root, if `value` is the square of a rational.
std::optional<BigRat> rational_sqrt(const BigRat& value);

}  // namespace darboux
