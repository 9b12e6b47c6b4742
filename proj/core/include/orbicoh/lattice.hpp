#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/int_matrix.hpp"
#include "orbicoh/integer.hpp"

namespace orbicoh {

/// U * M * V = S with U, V unimodular and S diagonal, diagonal entries
/// (the elementary divisors) non-negative, each dividing the next, and
/// zeros only at the end.
struct SNFDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::vector<Integer> divisors;  // min(rows, cols) entries of diag(S)

  std::size_t rank() const;
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

/// Z^rows / (column span of m).
FinAbGroup cokernel(const IntMatrix& m);

/// Index of a sublattice: either a positive finite integer or infinite.
/// Infinity is an explicit state, never encoded as 0.
class Index {
 public:
  explicit Index(Integer value) : value_(std::move(value)) {}
  static Index infinite() { return Index(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws Error(InvalidArgument) when infinite.
  const Integer& value() const;
  bool is_coprime_to(const Integer& p) const;

  friend bool operator==(const Index& a, const Index& b) = default;
  std::string to_string() const;  // decimal or "∞"

 private:
  Index() = default;
  std::optional<Integer> value_;
};

/// |Z^rows / column span|, infinite when the columns do not have full rank.
Index lattice_index(const IntMatrix& m);

/// (v / gcd(v), gcd(v)); throws Error(ZeroVector) for v = 0.
std::pair<IntVector, Integer> primitivize(const IntVector& v);

/// For r independent columns in Z^n, returns an (n - r) x n matrix P giving
/// a surjection Z^n -> Z^(n-r) whose kernel is the saturation of the column
/// span (its intersection with the real span). Throws Error(RankDeficient).
IntMatrix quotient_projection(const IntMatrix& basis);

/// Lexicographic (a, b), a < b, basis of the exterior square of Z^n.
std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t n);

/// Exterior square of Z^n modulo the span of all v_i ^ e_j. Throws
/// Error(DimensionTooSmall) for n < 2.
FinAbGroup wedge_square_quotient(std::size_t n, std::span<const IntVector> vectors);

}  // namespace orbicoh
