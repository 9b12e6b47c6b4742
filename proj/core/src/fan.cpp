#include "orbicoh/fan.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "orbicoh/error.hpp"
#include "orbicoh/lattice.hpp"

namespace orbicoh {

Fan::Fan(int n, std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones)
    : n_(n), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  std::set<IntVector> distinct;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    const auto& ray = rays_[r];
    if (static_cast<int>(ray.size()) != n)
      throw Error(ErrorCode::InconsistentInput, "ray " + std::to_string(r) + " has wrong length");
    if (content(ray) != 1)
      throw Error(ErrorCode::InconsistentInput,
                  "ray " + std::to_string(r) + " = " + to_string(ray) + " is not primitive");
    if (!distinct.insert(ray).second)
      throw Error(ErrorCode::InconsistentInput, "ray " + to_string(ray) + " is repeated");
  }
  std::vector<bool> used(rays_.size(), false);
  for (auto& cone : cones_) {
    std::sort(cone.begin(), cone.end());
    if (static_cast<int>(cone.size()) != n || std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error(ErrorCode::InconsistentInput, "a maximal cone must have n distinct rays");
    std::vector<IntVector> cols;
    for (int r : cone) {
      if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
        throw Error(ErrorCode::InconsistentInput, "cone uses unknown ray " + std::to_string(r));
      used[static_cast<std::size_t>(r)] = true;
      cols.push_back(rays_[static_cast<std::size_t>(r)]);
    }
    if (determinant(cols) == 0)
      throw Error(ErrorCode::InconsistentInput, "cone rays are linearly dependent");
  }
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) throw Error(ErrorCode::InconsistentInput, "ray " + std::to_string(r) + " is unused");
}

bool WallCheck::ok() const {
  return !counts.empty() && bad_walls().empty();
}

std::vector<std::vector<int>> WallCheck::bad_walls() const {
  std::vector<std::vector<int>> out;
  for (const auto& [wall, count] : counts)
    if (count != 2) out.push_back(wall);
  return out;
}

WallCheck wall_check(const Fan& f) {
  WallCheck check;
  for (const auto& cone : f.max_cones())
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<int> wall;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != skip) wall.push_back(cone[k]);
      ++check.counts[wall];
    }
  return check;
}

namespace {

struct ConeSolver {
  IntMatrix adjugate;
  Integer det;
};

ConeSolver solver_for(const Fan& f, const std::vector<int>& cone) {
  const auto n = static_cast<std::size_t>(f.dimension());
  std::vector<IntVector> cols;
  for (int r : cone) cols.push_back(f.rays()[static_cast<std::size_t>(r)]);
  IntMatrix a = IntMatrix::from_columns(n, cols);
  ConeSolver s{IntMatrix(n, n), determinant(a)};
  if (n == 1) {
    s.adjugate(0, 0) = 1;
    return s;
  }
  std::vector<std::size_t> rows, colsel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      colsel.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) colsel.push_back(k);
      }
      Integer minor = determinant(a.select(rows, colsel));
      // adj(A)[j][i] is the (i, j) cofactor.
      s.adjugate(j, i) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
    }
  return s;
}

enum class Placement { Outside, Interior, Boundary };

Placement place(const ConeSolver& s, const IntVector& x) {
  IntVector coords = s.adjugate * x;
  const int sign = sgn(s.det);
  bool zero = false;
  for (const auto& c : coords) {
    if (c == 0) {
      zero = true;
      continue;
    }
    if (sgn(c) != sign) return Placement::Outside;
  }
  return zero ? Placement::Boundary : Placement::Interior;
}

}  // namespace

CompletenessReport completeness_check(const Fan& f, std::size_t trials, std::uint64_t seed,
                                      long bound) {
  CompletenessReport report;
  report.walls = wall_check(f);
  std::vector<ConeSolver> solvers;
  for (const auto& cone : f.max_cones()) solvers.push_back(solver_for(f, cone));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  const auto n = static_cast<std::size_t>(f.dimension());
  IntVector x(n);
  while (report.trials < trials) {
    for (auto& e : x) e = entry(rng);
    if (is_zero(x)) {
      ++report.resampled;
      continue;
    }
    std::size_t interior = 0;
    bool boundary = false;
    for (const auto& s : solvers) {
      auto where = place(s, x);
      interior += where == Placement::Interior ? 1 : 0;
      boundary = boundary || where == Placement::Boundary;
    }
    if (boundary) {
      ++report.resampled;
      continue;
    }
    ++report.trials;
    if (interior != 1) {
      report.counterexample = x;
      report.containing_cones = interior;
      break;
    }
  }
  return report;
}

DualPair fan_to_pair(const Fan& f) {
  auto walls = wall_check(f);
  if (!walls.ok()) throw Error(ErrorCode::IncompleteFan, "some wall is not shared by exactly two cones");
  std::vector<FacetSet> vertices(f.max_cones().begin(), f.max_cones().end());
  auto poset = FacePoset::from_vertex_facets(f.dimension(), vertices);
  AssumptionFlags flags;
  flags.face_acyclic = true;
  return {std::move(poset), CharacteristicFunction(f.dimension(), f.rays()), flags};
}

std::pair<FinAbGroup, FinAbGroup> ray_delta_cokernels(int n, const std::vector<IntVector>& rays) {
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "delta maps need n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  // N_tau for a ray tau is the saturated line through it.
  std::vector<IntVector> lines;
  for (const auto& r : rays) lines.push_back(primitivize(r).first);
  FinAbGroup top = cokernel(IntMatrix::from_columns(dim, lines));

  // N_tau ^ N is spanned by u ^ e_j; in the e_a ^ e_b (a < b) basis its
  // coordinates are the 2x2 minors u_a w_b - u_b w_a with w = e_j.
  const auto basis = wedge_basis(dim);
  std::vector<IntVector> wedges;
  for (const auto& u : lines)
    for (std::size_t j = 0; j < dim; ++j) {
      IntVector col(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        auto [a, b] = basis[k];
        Integer wa = a == j ? 1 : 0;
        Integer wb = b == j ? 1 : 0;
        col[k] = u[a] * wb - u[b] * wa;
      }
      wedges.push_back(std::move(col));
    }
  FinAbGroup next = cokernel(IntMatrix::from_columns(basis.size(), wedges)).torsion_part();
  return {top, next};
}

std::pair<FinAbGroup, FinAbGroup> delta_cokernels(const Fan& f) {
  if (!wall_check(f).ok())
    throw Error(ErrorCode::IncompleteFan, "some wall is not shared by exactly two cones");
  return ray_delta_cokernels(f.dimension(), f.rays());
}

}  // namespace orbicoh
