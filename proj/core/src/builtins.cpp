#include "orbicoh/builtins.hpp"

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

void require_positive(const Integer& k, const char* name) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be >= 1");
}

IntVector vec(std::initializer_list<Integer> entries) { return IntVector(entries); }

std::vector<std::string> numbered(int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

NamedPair weighted_triangle(const Integer& a) {
  require_positive(a, "a");
  std::vector<FacetSet> verts{{0, 1}, {1, 2}, {0, 2}};
  return {FacePoset::from_vertex_facets(2, verts),
          CharacteristicFunction(2, {vec({2 * a, 1}), vec({0, 1}), vec({-a, -1})}), numbered(3)};
}

NamedPair simplex3_example() {
  return {reference_poset(PosetClass::Simplex, 3),
          CharacteristicFunction(3, {make_vector({0, 0, 1}), make_vector({2, 0, 1}),
                                     make_vector({0, 1, 1}), make_vector({-2, -1, -1})}),
          numbered(4)};
}

NamedFan fibration_fan(const Integer& a) {
  require_positive(a, "a");
  std::vector<IntVector> rays{vec({2 * a, 1, 0}), vec({0, 1, 0}), vec({-a, -1, 0}),
                              make_vector({0, 0, 1}), make_vector({1, 0, -1})};
  std::vector<std::vector<int>> cones;
  for (int e : {3, 4})
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) cones.push_back({e, i, j});
  return {Fan(3, std::move(rays), std::move(cones)), {"1", "2", "3", "+", "-"}};
}

NamedPair fibration_fiber(const Integer& a) {
  require_positive(a, "a");
  std::vector<FacetSet> verts{{0, 1}, {0, 2}, {1, 2}};
  return {FacePoset::from_vertex_facets(2, verts),
          CharacteristicFunction(2, {vec({2 * a, 1}), vec({0, 1}), vec({-a, -1})}), numbered(3)};
}

NamedFan counterexample_fan(const Integer& d) {
  require_positive(d, "d");
  // Indices: 0..4 are v_1..v_5, 5 is v_+, 6 is v_-.
  std::vector<IntVector> rays{make_vector({1, 0, 0}), vec({-1, d, -d}), vec({-1, -d, 0}),
                              make_vector({0, 1, 0}), vec({d, 1 - d, -d}), make_vector({0, 0, 1}),
                              make_vector({1, -1, -1})};
  std::vector<std::vector<int>> cones{{0, 3, 5}, {1, 3, 5}, {0, 4, 6}, {0, 1, 3}, {0, 2, 5},
                                      {0, 2, 6}, {0, 1, 4}, {1, 4, 6}, {1, 2, 6}, {1, 2, 5}};
  return {Fan(3, std::move(rays), std::move(cones)), {"1", "2", "3", "4", "5", "+", "-"}};
}

NamedPair reference_pair(PosetClass kind, int n) {
  FacePoset poset = reference_poset(kind, n);
  const auto dim = static_cast<std::size_t>(n);
  auto unit = [dim](std::size_t i, long sign = 1) {
    IntVector e(dim, 0);
    e[i] = sign;
    return e;
  };
  std::vector<IntVector> vectors;
  std::vector<std::string> names;
  switch (kind) {
    case PosetClass::Diamond:
      for (std::size_t i = 0; i < dim; ++i) vectors.push_back(unit(i));
      names = numbered(n);
      break;
    case PosetClass::Simplex:
      for (std::size_t i = 0; i < dim; ++i) vectors.push_back(unit(i));
      vectors.emplace_back(dim, -1);
      names = numbered(n + 1);
      break;
    case PosetClass::Prism:
      // Sides carry the fan of the (n-1)-simplex in the first n-1 coordinates.
      for (std::size_t i = 0; i + 1 < dim; ++i) vectors.push_back(unit(i));
      {
        IntVector last(dim, -1);
        last[dim - 1] = 0;
        vectors.push_back(last);
      }
      vectors.push_back(unit(dim - 1));
      vectors.push_back(unit(dim - 1, -1));
      names = numbered(n);
      names.push_back("+");
      names.push_back("-");
      break;
    case PosetClass::Other:
      throw Error(ErrorCode::InvalidArgument, "no reference pair for class Other");
  }
  return {std::move(poset), CharacteristicFunction(n, std::move(vectors)), std::move(names)};
}

}  // namespace orbicoh
