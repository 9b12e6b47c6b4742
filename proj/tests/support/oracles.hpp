#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbicoh/charfun.hpp"
#include "orbicoh/int_matrix.hpp"
#include "orbicoh/integer.hpp"

// Reference computations that share no code with the library's normal-form
// routines. Everything here is exponential and meant for small inputs.
namespace oracle {

using orbicoh::Integer;
using orbicoh::IntMatrix;
using orbicoh::IntVector;

/// Cofactor expansion along the first row.
Integer laplace_det(const IntMatrix& m);

/// delta_i = gcd of all i x i minors, for i = 1..min(rows, cols).
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

/// Invariant factors > 1 of Z^rows / column span, from determinantal
/// divisors, together with the free rank.
struct GroupShape {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // ascending, each dividing the next
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};
GroupShape cokernel_by_minors(const IntMatrix& m);

/// Invariant factors of Z^n / A Z^n for nonsingular square A, found by
/// enumerating the finite group and counting elements killed by p^j.
std::vector<Integer> cokernel_by_cosets(const IntMatrix& a);

/// Vectors spanning wedge^2 Z^n modulo v ^ e_j, written in the (a < b)
/// basis by expanding v ^ e_j term by term.
IntMatrix wedge_matrix(std::size_t n, const std::vector<IntVector>& vectors);

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
/// Square matrix with 0 < |det| <= max_det.
IntMatrix random_nonsingular(Rng& rng, std::size_t n, long bound, long max_det);
/// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12);
IntVector random_primitive(Rng& rng, std::size_t n, long bound);
/// Rejection-samples primitive vectors until validate() accepts them.
orbicoh::CharacteristicFunction random_charfun(Rng& rng, const orbicoh::FacePoset& p, long bound);

}  // namespace oracle
