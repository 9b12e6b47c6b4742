#include <gtest/gtest.h>

#include <functional>

#include "orbicoh/builtins.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/poset.hpp"

using namespace orbicoh;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

std::size_t count_dim(const FacePoset& p, int dim) {
  std::size_t c = 0;
  for (const auto& f : p.faces()) c += f.dim == dim ? 1 : 0;
  return c;
}

// Faces of the product of an (n-1)-simplex and an interval, counted
// directly: a face is (nonempty subset of simplex vertices) x (one of
// three interval faces).
std::size_t prism_face_count(int n) { return ((std::size_t{1} << n) - 1) * 3; }

FacePoset counterexample_poset() {
  return FacePoset::from_vertex_facets(3, counterexample_fan(1).fan.max_cones());
}

}  // namespace

TEST(FacePoset, Triangle) {
  std::vector<FacetSet> verts{{0, 1}, {1, 2}, {0, 2}};
  auto p = FacePoset::from_vertex_facets(2, verts);
  EXPECT_EQ(p.facet_count(), 3);
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.size(), 7u);  // Q, 3 edges, 3 vertices
  EXPECT_TRUE(p.is_nice());
  EXPECT_TRUE(p.face(p.top()).facets.empty());
  EXPECT_EQ(classify(p), PosetClass::Simplex);
}

TEST(FacePoset, CounterexamplePolytope) {
  auto p = counterexample_poset();
  EXPECT_EQ(p.facet_count(), 7);
  EXPECT_EQ(p.vertex_count(), 10u);
  EXPECT_EQ(count_dim(p, 1), 15u);
  EXPECT_EQ(classify(p), PosetClass::Other);
}

TEST(FacePoset, PrismPatternMatchesDirectCount) {
  for (int n = 2; n <= 4; ++n) {
    auto p = reference_poset(PosetClass::Prism, n);
    EXPECT_EQ(p.size(), prism_face_count(n)) << n;
    EXPECT_EQ(p.vertex_count(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(p.facet_count(), n + 2);
  }
}

TEST(FacePoset, GradingAndMaximum) {
  for (auto kind : {PosetClass::Simplex, PosetClass::Diamond, PosetClass::Prism})
    for (int n = 2; n <= 4; ++n) {
      auto p = reference_poset(kind, n);
      for (const auto& a : p.faces()) {
        EXPECT_TRUE(p.leq(a.id, p.top()));
        EXPECT_EQ(a.dim, n - static_cast<int>(a.facets.size()));
        for (const auto& b : p.faces())
          if (a.id != b.id && p.leq(a.id, b.id)) EXPECT_LT(a.dim, b.dim);
      }
    }
}

TEST(FacePoset, SimplexFaceCount) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(reference_poset(PosetClass::Simplex, n).size(), (std::size_t{1} << (n + 1)) - 1);
}

TEST(FacePoset, DiamondHasTwoVertexComponents) {
  auto p = reference_poset(PosetClass::Diamond, 2);
  EXPECT_EQ(p.facet_count(), 2);
  auto vs = p.faces_with({0, 1});
  ASSERT_EQ(vs.size(), 2u);
  EXPECT_EQ(p.face(vs[0]).component, 0);
  EXPECT_EQ(p.face(vs[1]).component, 1);
  EXPECT_EQ(classify(p), PosetClass::Diamond);
  EXPECT_NE(p.face_label(vs[0]), p.face_label(vs[1]));
}

TEST(FacePoset, SimplexVertexNumbering) {
  auto p = reference_poset(PosetClass::Simplex, 3);
  EXPECT_EQ(p.facet_count(), 4);
  EXPECT_EQ(p.vertex_count(), 4u);
  for (int i = 0; i < 4; ++i) {
    FacetSet missing;
    for (int j = 0; j < 4; ++j)
      if (j != i) missing.push_back(j);
    auto q = p.faces_with(missing);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_FALSE(p.leq(q[0], p.facet(i)));
  }
}

TEST(FacePoset, ReferenceErrors) {
  EXPECT_EQ(code_of([] { reference_poset(PosetClass::Other, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { reference_poset(PosetClass::Diamond, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { reference_poset(PosetClass::Simplex, 0); }), ErrorCode::InvalidArgument);
}

TEST(FacePoset, InconsistentVertexData) {
  // An edge {0} with three endpoints.
  std::vector<FacetSet> bad{{0, 1}, {0, 2}, {0, 3}, {1, 2}};
  EXPECT_EQ(code_of([&] { FacePoset::from_vertex_facets(2, bad); }), ErrorCode::InconsistentInput);
  // Facet 1 never used.
  std::vector<FacetSet> gap{{0, 2}, {0, 2}};
  EXPECT_EQ(code_of([&] { FacePoset::from_vertex_facets(2, gap); }), ErrorCode::InconsistentInput);
  // Wrong vertex size.
  std::vector<FacetSet> size{{0, 1, 2}};
  EXPECT_EQ(code_of([&] { FacePoset::from_vertex_facets(2, size); }), ErrorCode::InconsistentInput);
  // Two disjoint triangles.
  std::vector<FacetSet> split{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_EQ(code_of([&] { FacePoset::from_vertex_facets(2, split); }), ErrorCode::InconsistentInput);
}

TEST(FacePoset, ExplicitAnnulus) {
  // Annulus: two boundary circles, no vertices.
  std::vector<FaceSpec> faces{{{0}, {}}, {{1}, {}}};
  auto p = FacePoset::from_faces(2, 2, faces);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.vertex_count(), 0u);
  EXPECT_FALSE(p.polytopal());
  EXPECT_EQ(classify(p), PosetClass::Other);
}

TEST(FacePoset, ExplicitFacesReproduceTriangle) {
  // Edges 0,1,2 then vertices 3: {0,1}, 4: {1,2}, 5: {0,2}.
  std::vector<FaceSpec> faces{{{0}, {3, 5}}, {{1}, {3, 4}}, {{2}, {4, 5}},
                              {{0, 1}, {}},  {{1, 2}, {}},  {{0, 2}, {}}};
  auto p = FacePoset::from_faces(2, 3, faces);
  EXPECT_TRUE(isomorphic(p, reference_poset(PosetClass::Simplex, 2)));
}

TEST(FacePoset, ExplicitFacesRejectListedTop) {
  std::vector<FaceSpec> faces{{{}, {}}};
  EXPECT_EQ(code_of([&] { FacePoset::from_faces(2, 0, faces); }), ErrorCode::InconsistentInput);
}

TEST(FacePoset, ExplicitFacesNotNice) {
  // Facet 0 contains a vertex that claims facets {0,1}, but facet 1 does
  // not contain it.
  std::vector<FaceSpec> faces{{{0}, {2}}, {{1}, {}}, {{0, 1}, {}}};
  EXPECT_EQ(code_of([&] { FacePoset::from_faces(2, 2, faces); }), ErrorCode::NotNice);
}

TEST(EulerCount, ThreeDimensionalSpheres) {
  auto prism = reference_poset(PosetClass::Prism, 3);
  EXPECT_EQ(prism.vertex_count(), 2u * 5 - 4);
  auto cube = FacePoset::from_vertex_facets(
      3, std::vector<FacetSet>{{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                               {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  EXPECT_EQ(cube.vertex_count(), 2u * 6 - 4);
  EXPECT_EQ(classify(cube), PosetClass::Other);
  EXPECT_EQ(counterexample_poset().vertex_count(), 2u * 7 - 4);
}

TEST(VertexCut, ChainDiamondSimplexPrism) {
  for (int n = 2; n <= 4; ++n) {
    auto diamond = reference_poset(PosetClass::Diamond, n);
    for (FaceId q : diamond.vertices()) {
      auto s = vertex_cut(diamond, q);
      EXPECT_EQ(classify(s), PosetClass::Simplex) << n;
      EXPECT_EQ(s.facet_count(), n + 1);
      for (FaceId r : s.vertices()) EXPECT_EQ(classify(vertex_cut(s, r)), PosetClass::Prism) << n;
    }
  }
}

TEST(VertexCut, NewFacetIsSimplex) {
  auto p = reference_poset(PosetClass::Prism, 3);
  auto cut = vertex_cut(p, p.vertices().front());
  FaceId fresh = cut.facet(cut.facet_count() - 1);
  EXPECT_EQ(cut.facets_of(fresh).size(), 3u);
  std::size_t below = cut.faces_below(fresh).size();
  EXPECT_EQ(below, 7u);  // triangle, 3 edges, 3 vertices
}

TEST(VertexCut, OldFacesAwayFromVertexUnchanged) {
  auto p = reference_poset(PosetClass::Simplex, 3);
  FaceId q = p.vertices().front();
  auto cut = vertex_cut(p, q);
  for (const auto& f : p.faces())
    if (!p.leq(q, f.id)) EXPECT_EQ(cut.faces_with(f.facets).size(), 1u);
}

TEST(VertexCut, RejectsNonVertex) {
  auto p = reference_poset(PosetClass::Simplex, 2);
  EXPECT_EQ(code_of([&] { vertex_cut(p, p.top()); }), ErrorCode::InvalidArgument);
}

TEST(VertexCut, FourCutsOfDiamondGiveCounterexamplePolytope) {
  // Diamond(3) on Q_1,Q_2,Q_3 (indices 0,1,2). Cutting both vertices gives
  // the prism with Q_+ (3) and Q_- (4); cutting the vertices
  // Q_1∩Q_2∩Q_+ and Q_1∩Q_2∩Q_- gives Q_4 (5) and Q_5 (6).
  auto p = reference_poset(PosetClass::Diamond, 3);
  p = vertex_cut(p, p.vertices()[0]);
  p = vertex_cut(p, p.faces_with({0, 1, 2}).at(0));
  p = vertex_cut(p, p.faces_with({0, 1, 3}).at(0));
  p = vertex_cut(p, p.faces_with({0, 1, 4}).at(0));
  // Relabel to the fan's ray order 1..5, +, - = 0..4, 5, 6.
  auto target = counterexample_poset();
  auto iso = find_isomorphism(p, target);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(p.vertex_count(), 10u);
}

TEST(Collapse, InvertsVertexCut) {
  for (auto kind : {PosetClass::Simplex, PosetClass::Diamond, PosetClass::Prism})
    for (int n = 2; n <= 4; ++n) {
      auto p = reference_poset(kind, n);
      for (FaceId q : p.vertices()) {
        auto cut = vertex_cut(p, q);
        auto back = collapse_facets(cut, {cut.facet_count() - 1});
        EXPECT_TRUE(isomorphic(back, p)) << to_string(kind) << n;
      }
    }
}

TEST(Collapse, PrismToSimplexToDiamond) {
  for (int n = 2; n <= 4; ++n) {
    auto prism = reference_poset(PosetClass::Prism, n);
    EXPECT_EQ(classify(collapse_facets(prism, {n})), PosetClass::Simplex);
    auto simplex = reference_poset(PosetClass::Simplex, n);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(classify(collapse_facets(simplex, {i})), PosetClass::Diamond);
  }
}

TEST(Collapse, CounterexampleToDiamond) {
  auto p = counterexample_poset();
  // Collapse Q_4 ∪ Q_+ (3, 5); facets renumber to 1,2,3,5,- = 0..4.
  auto once = collapse_facets(p, {3, 5});
  EXPECT_EQ(once.facet_count(), 5);
  auto twice = collapse_facets(once, {3, 4});
  EXPECT_EQ(twice.facet_count(), 3);
  EXPECT_EQ(classify(twice), PosetClass::Diamond);
}

TEST(Collapse, Errors) {
  auto p = reference_poset(PosetClass::Prism, 3);
  // Q_+ and Q_- are disjoint.
  EXPECT_EQ(code_of([&] { collapse_facets(p, {3, 4}); }), ErrorCode::CollapseNotNice);
  // Collapsing one side meets all other four facets.
  EXPECT_EQ(code_of([&] { collapse_facets(p, {0}); }), ErrorCode::CollapseNotNice);
  EXPECT_EQ(code_of([&] { collapse_facets(p, {}); }), ErrorCode::InvalidArgument);
}

TEST(Isomorphism, DetectsDifferences) {
  auto s = reference_poset(PosetClass::Simplex, 3);
  EXPECT_TRUE(isomorphic(s, s));
  EXPECT_FALSE(isomorphic(s, reference_poset(PosetClass::Prism, 3)));
  auto diamond = reference_poset(PosetClass::Diamond, 3);
  auto iso = find_isomorphism(s, vertex_cut(diamond, diamond.vertices()[1]));
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->face_map.size(), s.size());
}

TEST(Classify, References) {
  EXPECT_EQ(classify(reference_poset(PosetClass::Prism, 4)), PosetClass::Prism);
  EXPECT_EQ(classify(reference_poset(PosetClass::Simplex, 1)), PosetClass::Simplex);
  auto c = classify_detailed(reference_poset(PosetClass::Prism, 3));
  ASSERT_TRUE(c.from_reference.has_value());
  EXPECT_EQ(c.from_reference->facet_map.size(), 5u);
}
