#include "orbicoh/integer.hpp"

#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotNice: return "NotNice";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::CollapseNotNice: return "CollapseNotNice";
    case ErrorCode::ZeroDimensionalFace: return "ZeroDimensionalFace";
    case ErrorCode::MissingAssumption: return "MissingAssumption";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::vector<Integer> prime_factors(const Integer& a) {
  std::vector<Integer> primes;
  Integer rest = abs(a);
  if (rest <= 1) return primes;
  auto strip = [&](const Integer& p) {
    if (!divides(p, rest)) return;
    primes.push_back(p);
    do rest /= p;
    while (divides(p, rest));
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (Integer p = 5; p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  auto f = prime_factors(p);
  return f.size() == 1 && f.front() == p;
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size())
    throw Error(ErrorCode::InvalidArgument, "not an integer: \"" + text + "\"");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::InvalidArgument, "not an integer: \"" + text + "\"");
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long x : entries) v.emplace_back(x);
  return v;
}

}  // namespace orbicoh
