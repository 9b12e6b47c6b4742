#pragma once

#include <string>
#include <vector>

#include "orbicoh/charfun.hpp"
#include "orbicoh/fan.hpp"
#include "orbicoh/poset.hpp"

namespace orbicoh {

/// A poset with a characteristic function and display names for the facets.
struct NamedPair {
  FacePoset poset;
  CharacteristicFunction v;
  std::vector<std::string> facet_names;
};

struct NamedFan {
  Fan fan;
  std::vector<std::string> ray_names;
};

/// Triangle with v = (2a,1), (0,1), (-a,-1). Requires a >= 1.
NamedPair weighted_triangle(const Integer& a);

/// 3-simplex with v = (0,0,1), (2,0,1), (0,1,1), (-2,-1,-1).
NamedPair simplex3_example();

/// Bipyramid fan: v_1 = (2a,1,0), v_2 = (0,1,0), v_3 = (-a,-1,0),
/// v_+ = (0,0,1), v_- = (1,0,-1), cones {e,i,j}. Requires a >= 1.
NamedFan fibration_fan(const Integer& a);

/// 2-dimensional fan of the fiber over CP^1 in fibration_fan(a).
NamedPair fibration_fiber(const Integer& a);

/// Seven rays v_1..v_5, v_+, v_- and ten cones of the prism with two
/// vertices cut. Requires d >= 1.
NamedFan counterexample_fan(const Integer& d);

/// reference_poset(kind, n) with a unimodular characteristic function.
NamedPair reference_pair(PosetClass kind, int n);

}  // namespace orbicoh
