#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("laplace_det needs a square matrix");
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    Integer minor = laplace_det(m.select(rows, cols));
    if (c % 2 == 0)
      total += m(0, c) * minor;
    else
      total -= m(0, c) * minor;
  }
  return total;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) g = gcd_of(g, laplace_det(m.select(rs, cs)));
    out.push_back(g);
  }
  return out;
}

GroupShape cokernel_by_minors(const IntMatrix& m) {
  GroupShape shape;
  auto deltas = determinantal_divisors(m);
  std::size_t r = 0;
  Integer prev = 1;
  for (const auto& d : deltas) {
    if (d == 0) break;
    Integer eps = d / prev;
    if (eps > 1) shape.torsion.push_back(eps);
    prev = d;
    ++r;
  }
  shape.free_rank = m.rows() - r;
  return shape;
}

std::vector<Integer> cokernel_by_cosets(const IntMatrix& a) {
  const std::size_t n = a.rows();
  Integer det = laplace_det(a);
  if (det == 0) throw std::invalid_argument("cokernel_by_cosets needs a nonsingular matrix");
  const long d = std::abs(det.get_si());
  // adj(A) x mod |det| is a faithful coordinate for the coset x + A Z^n.
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        adj(0, 0) = 1;
        continue;
      }
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rs.push_back(k);
        if (k != j) cs.push_back(k);
      }
      Integer minor = laplace_det(a.select(rs, cs));
      adj(j, i) = (i + j) % 2 == 0 ? minor : Integer(-minor);
    }
  auto reduce = [d](std::vector<long> key) {
    for (auto& x : key) x = ((x % d) + d) % d;
    return key;
  };
  std::vector<std::vector<long>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = adj(r, i).get_si();
    gens.push_back(reduce(g));
  }
  std::set<std::vector<long>> group{std::vector<long>(n, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<long> y(n);
      for (std::size_t r = 0; r < n; ++r) y[r] = x[r] + g[r];
      y = reduce(y);
      if (group.insert(y).second) frontier.push_back(y);
    }
  }
  if (static_cast<long>(group.size()) != d) throw std::logic_error("coset count differs from |det|");

  // For each prime p, r_j = log_p |G[p^j]| - log_p |G[p^(j-1)]| counts the
  // cyclic p-factors of order >= p^j.
  std::map<long, std::vector<int>> exponents;  // p -> exponents of p-factors, descending
  long rest = d;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::size_t> killed{1};
    for (long pj = p;; pj *= p) {
      std::size_t count = 0;
      for (const auto& x : group) {
        bool zero = true;
        for (long c : x) zero = zero && (c * pj) % d == 0;
        count += zero ? 1 : 0;
      }
      if (count == killed.back()) break;
      killed.push_back(count);
    }
    std::vector<int> at_least;  // at_least[j-1] = #factors of order >= p^j
    for (std::size_t j = 1; j < killed.size(); ++j) {
      std::size_t ratio = killed[j] / killed[j - 1];
      int r = 0;
      while (ratio > 1) {
        ratio /= static_cast<std::size_t>(p);
        ++r;
      }
      at_least.push_back(r);
    }
    std::vector<int> exps;
    for (int k = 1; !at_least.empty() && k <= at_least.front(); ++k) {
      int e = 0;
      for (std::size_t j = 0; j < at_least.size(); ++j)
        if (at_least[j] >= k) e = static_cast<int>(j) + 1;
      exps.push_back(e);
    }
    exponents[p] = exps;
  }
  std::size_t count = 0;
  for (const auto& [p, exps] : exponents) count = std::max(count, exps.size());
  std::vector<Integer> factors;
  for (std::size_t k = 0; k < count; ++k) {
    Integer t = 1;
    for (const auto& [p, exps] : exponents)
      if (k < exps.size())
        for (int e = 0; e < exps[k]; ++e) t *= p;
    factors.push_back(t);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

IntMatrix wedge_matrix(std::size_t n, const std::vector<IntVector>& vectors) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t next = slot.size();
      slot[{a, b}] = next;
    }
  IntMatrix out(slot.size(), vectors.size() * n);
  std::size_t col = 0;
  for (const auto& v : vectors)
    for (std::size_t j = 0; j < n; ++j, ++col)
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j || v[i] == 0) continue;
        if (i < j)
          out(slot[{i, j}], col) += v[i];
        else
          out(slot[{j, i}], col) -= v[i];
      }
  return out;
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

IntMatrix random_nonsingular(Rng& rng, std::size_t n, long bound, long max_det) {
  for (;;) {
    IntMatrix m = random_matrix(rng, n, n, bound);
    Integer det = laplace_det(m);
    if (det != 0 && abs(det) <= max_det) return m;
  }
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 3)) {
      case 0: u.swap_rows(i, j); break;
      case 1: u.negate_row(i); break;
      default: u.add_row_multiple(i, j, Integer(uniform(rng, -2, 2))); break;
    }
  }
  return u;
}

IntVector random_primitive(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    IntVector v(n);
    Integer g = 0;
    for (auto& x : v) {
      x = uniform(rng, -bound, bound);
      g = gcd_of(g, x);
    }
    if (g == 1) return v;
  }
}

orbicoh::CharacteristicFunction random_charfun(Rng& rng, const orbicoh::FacePoset& p, long bound) {
  const auto n = static_cast<std::size_t>(p.dimension());
  for (;;) {
    std::vector<IntVector> vs;
    for (int i = 0; i < p.facet_count(); ++i) vs.push_back(random_primitive(rng, n, bound));
    orbicoh::CharacteristicFunction v(p.dimension(), std::move(vs));
    if (orbicoh::validate(p, v).ok()) return v;
  }
}

}  // namespace oracle
