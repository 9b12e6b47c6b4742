#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbicoh {

using FaceId = std::size_t;
/// Sorted, duplicate-free list of facet indices (0-based).
using FacetSet = std::vector<int>;

/// A face Q_I of a manifold with corners: the `component`-th connected
/// component of the intersection of the facets in `facets`.
struct Face {
  FaceId id = 0;
  FacetSet facets;
  int component = 0;
  int dim = 0;
};

/// The three shapes for which the torsion criterion is sharp, plus Other.
enum class PosetClass { Simplex, Diamond, Prism, Other };

std::string to_string(PosetClass c);

/// Entry of an explicitly listed face poset: its facet set and the list
/// indices of the faces it directly covers (its own facets).
struct FaceSpec {
  FacetSet facets;
  std::vector<std::size_t> covers;

  friend bool operator==(const FaceSpec&, const FaceSpec&) = default;
};

/// Graded face poset of a nice manifold with corners. Face 0 is always Q
/// itself; faces are ordered by decreasing dimension, then by facet set,
/// then by component. Immutable once built; every constructor validates
/// niceness and throws Error(NotNice) or Error(InconsistentInput).
class FacePoset {
 public:
  /// Faces generated from the vertices of a simple-polytope-like object,
  /// each vertex given by the n facets meeting there.
  static FacePoset from_vertex_facets(int n, std::span<const FacetSet> vertices);

  /// Explicit poset; Q is implicit and covers every facet.
  static FacePoset from_faces(int n, int m, std::span<const FaceSpec> faces);

  /// General constructor from facet sets and a full order relation
  /// (leq[a][b] true iff face a is contained in face b). Component indices
  /// are assigned in list order.
  static FacePoset from_order(int n, int m, std::vector<FacetSet> facet_sets,
                              std::vector<std::vector<bool>> leq, bool polytopal);

  int dimension() const noexcept { return n_; }
  int facet_count() const noexcept { return m_; }
  std::size_t size() const noexcept { return faces_.size(); }

  std::span<const Face> faces() const noexcept { return faces_; }
  const Face& face(FaceId id) const { return faces_.at(id); }
  FaceId top() const noexcept { return 0; }
  /// Id of the facet Q_i.
  FaceId facet(int i) const { return facet_ids_.at(static_cast<std::size_t>(i)); }

  bool leq(FaceId a, FaceId b) const { return leq_[a][b]; }
  /// Faces contained in `id`, including itself, in face order.
  std::vector<FaceId> faces_below(FaceId id) const;
  /// Faces of dimension dim(id) - 1 contained in `id`.
  std::vector<FaceId> facets_of(FaceId id) const;
  std::vector<FaceId> vertices() const;
  std::size_t vertex_count() const;
  /// Faces with exactly this facet set (one per component).
  std::vector<FaceId> faces_with(const FacetSet& facets) const;

  /// True when built from polytope-style data (every face contractible),
  /// which is what licenses the face-acyclic assumption by default.
  bool polytopal() const noexcept { return polytopal_; }

  /// Re-runs the niceness checks on the stored structure.
  bool is_nice() const { return !niceness_violation().has_value(); }
  std::optional<std::string> niceness_violation() const;

  std::string face_label(FaceId id) const;

  /// Facet sets of the vertices, in vertex order.
  std::vector<FacetSet> vertex_facet_sets() const;

 private:
  FacePoset() = default;

  int n_ = 0;
  int m_ = 0;
  bool polytopal_ = false;
  std::vector<Face> faces_;
  std::vector<std::vector<bool>> leq_;
  std::vector<FaceId> facet_ids_;
};

/// Reference shapes: Simplex(n) has facets 0..n with vertex q_i missing
/// facet i; Diamond(n) has n facets and two vertices; Prism(n) has facets
/// 0..n-1 (the sides Q_1..Q_n), n (Q_+) and n+1 (Q_-), with vertex
/// q_i^e missing side i. Diamond and Prism need n >= 2.
FacePoset reference_poset(PosetClass kind, int n);

/// Truncates the vertex `q`; the new facet gets index m.
FacePoset vertex_cut(const FacePoset& p, FaceId q);

/// Collapses the union of the facets in `facets` to a single new vertex.
/// Remaining facets are renumbered in increasing order.
FacePoset collapse_facets(const FacePoset& p, const FacetSet& facets);

/// Poset isomorphism: facet_map[i] is the facet of `b` matched with facet i
/// of `a`, face_map likewise for faces.
struct PosetIsomorphism {
  std::vector<int> facet_map;
  std::vector<FaceId> face_map;
};

std::optional<PosetIsomorphism> find_isomorphism(const FacePoset& a, const FacePoset& b);
inline bool isomorphic(const FacePoset& a, const FacePoset& b) {
  return find_isomorphism(a, b).has_value();
}

struct Classification {
  PosetClass kind = PosetClass::Other;
  /// Isomorphism from reference_poset(kind, n) to the classified poset.
  std::optional<PosetIsomorphism> from_reference;
};

Classification classify_detailed(const FacePoset& p);
inline PosetClass classify(const FacePoset& p) { return classify_detailed(p).kind; }

}  // namespace orbicoh
