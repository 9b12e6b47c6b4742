#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbicoh/charfun.hpp"
#include "orbicoh/cohomology.hpp"
#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/poset.hpp"

namespace orbicoh {

/// Simplicial fan in R^n given by its rays and maximal cones (each cone a
/// set of n ray indices). The constructor rejects non-primitive or repeated
/// rays, cones of the wrong size or with dependent rays, and unused rays,
/// with Error(InconsistentInput).
class Fan {
 public:
  Fan(int n, std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones);

  int dimension() const noexcept { return n_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  /// Each cone sorted increasingly.
  const std::vector<std::vector<int>>& max_cones() const noexcept { return cones_; }

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  int n_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<int>> cones_;
};

/// How many maximal cones contain each (n-1)-subset of a maximal cone.
struct WallCheck {
  std::map<std::vector<int>, int> counts;

  bool ok() const;
  std::vector<std::vector<int>> bad_walls() const;
};

WallCheck wall_check(const Fan& f);

struct CompletenessReport {
  WallCheck walls;
  std::size_t trials = 0;
  /// Sample points discarded because they lay on a cone boundary.
  std::size_t resampled = 0;
  /// First sampled direction not lying in exactly one maximal cone.
  std::optional<IntVector> counterexample;
  std::size_t containing_cones = 0;

  bool passed() const { return walls.ok() && !counterexample.has_value(); }
};

inline constexpr std::size_t kDefaultTrials = 10000;
inline constexpr long kDefaultSampleBound = 1000;

/// Wall condition plus exact sampling of `trials` integer directions with
/// entries in [-bound, bound].
CompletenessReport completeness_check(const Fan& f, std::size_t trials = kDefaultTrials,
                                      std::uint64_t seed = 0, long bound = kDefaultSampleBound);

/// Orbit-space data of the toric variety: facets are rays, vertices are
/// maximal cones, faces are cones.
struct DualPair {
  FacePoset poset;
  CharacteristicFunction v;
  AssumptionFlags flags;
};

/// Throws Error(IncompleteFan) when the wall condition fails.
DualPair fan_to_pair(const Fan& f);

/// (coker of the top boundary map, coker of the next one), i.e. the groups
/// H^{2n-1} and Tor H^{2n-2}, built from saturated one-dimensional lattices
/// of the rays and their 2x2 minors with the e_j.
std::pair<FinAbGroup, FinAbGroup> ray_delta_cokernels(int n, const std::vector<IntVector>& rays);

/// ray_delta_cokernels on a fan passing the wall condition, else
/// Error(IncompleteFan).
std::pair<FinAbGroup, FinAbGroup> delta_cokernels(const Fan& f);

}  // namespace orbicoh
