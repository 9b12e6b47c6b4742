#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orbicoh {

/// Arbitrary-precision signed integer. Every entry, determinant and divisor
/// in the library is carried in this type; there is no machine-word path.
using Integer = mpz_class;

/// Column vector in Z^n.
using IntVector = std::vector<Integer>;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// gcd of all entries; 0 for the empty or zero vector.
Integer content(const IntVector& v);

bool is_zero(const IntVector& v);

/// True when `d` divides `a` (0 divides only 0).
bool divides(const Integer& d, const Integer& a);

/// Distinct prime divisors of |a| in increasing order, by trial division.
/// Returns an empty list for 0 and ±1.
std::vector<Integer> prime_factors(const Integer& a);

bool is_prime(const Integer& p);

/// Parses an optionally signed decimal string; throws Error(InvalidArgument).
Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const IntVector& v);

IntVector make_vector(std::initializer_list<long> entries);

}  // namespace orbicoh
