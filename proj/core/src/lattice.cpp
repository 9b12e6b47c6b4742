#include "orbicoh/lattice.hpp"

#include "orbicoh/error.hpp"

namespace orbicoh {

std::size_t SNFDecomposition::rank() const {
  std::size_t r = 0;
  while (r < divisors.size() && divisors[r] != 0) ++r;
  return r;
}

namespace {

// Position of a nonzero entry of minimal absolute value in the trailing
// block S[t.., t..]; false when the block is zero.
bool find_min_pivot(const IntMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      const Integer& x = s(i, j);
      if (x == 0) continue;
      if (!found || abs(x) < best) {
        best = abs(x);
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& m) {
  SNFDecomposition d{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& S = d.S;
  IntMatrix& U = d.U;
  IntMatrix& V = d.V;
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(S, t, pr, pc)) break;
    for (;;) {
      S.swap_rows(t, pr);
      U.swap_rows(t, pr);
      S.swap_cols(t, pc);
      V.swap_cols(t, pc);

      // Each failed pass leaves a remainder smaller than the pivot, so the
      // pivot magnitude strictly decreases and the loop terminates.
      bool clean = true;
      for (std::size_t i = t + 1; i < S.rows(); ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < S.cols(); ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_min_pivot(S, t, pr, pc);
        continue;
      }

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < S.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < S.cols(); ++j)
          if (!divides(S(t, t), S(i, j))) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
      pr = t;
      pc = t;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }

  d.divisors.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) d.divisors.push_back(S(i, i));
  return d;
}

FinAbGroup cokernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<Integer> orders(snf.divisors.begin(), snf.divisors.begin() + static_cast<std::ptrdiff_t>(r));
  return FinAbGroup::from_cyclic_orders(m.rows() - r, std::move(orders));
}

const Integer& Index::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "index is infinite");
  return *value_;
}

bool Index::is_coprime_to(const Integer& p) const {
  return value_ && gcd(*value_, p) == 1;
}

std::string Index::to_string() const { return value_ ? value_->get_str() : "∞"; }

Index lattice_index(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  if (snf.rank() < m.rows()) return Index::infinite();
  Integer product = 1;
  for (const auto& e : snf.divisors) product *= e;
  return Index(product);
}

std::pair<IntVector, Integer> primitivize(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  IntVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(p[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return {std::move(p), std::move(g)};
}

IntMatrix quotient_projection(const IntMatrix& basis) {
  const std::size_t n = basis.rows();
  const std::size_t r = basis.cols();
  const auto snf = smith_normal_form(basis);
  if (snf.rank() != r)
    throw Error(ErrorCode::RankDeficient,
                "sublattice basis has rank " + std::to_string(snf.rank()) + " < " +
                    std::to_string(r) + " columns");
  // U * B * V = diag(eps): U maps the saturation of span(B) onto the first r
  // coordinates, so the trailing rows of U project it away.
  IntMatrix p(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i - r, j) = snf.U(i, j);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) basis.emplace_back(a, b);
  return basis;
}

FinAbGroup wedge_square_quotient(std::size_t n, std::span<const IntVector> vectors) {
  if (n < 2)
    throw Error(ErrorCode::DimensionTooSmall, "exterior square needs n >= 2, got n = " + std::to_string(n));
  const auto basis = wedge_basis(n);
  auto slot = [n](std::size_t a, std::size_t b) {
    // position of (a, b), a < b, in lexicographic order
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  };
  IntMatrix gens(basis.size(), vectors.size() * n);
  std::size_t col = 0;
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "vector length differs from n");
    for (std::size_t j = 0; j < n; ++j, ++col) {
      // v ^ e_j = sum_i v_i e_i ^ e_j, with e_j ^ e_i = -e_i ^ e_j
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j || v[i] == 0) continue;
        if (i < j)
          gens(slot(i, j), col) += v[i];
        else
          gens(slot(j, i), col) -= v[i];
      }
    }
  }
  return cokernel(gens);
}

}  // namespace orbicoh
