#include "orbicoh/charfun.hpp"

#include <algorithm>

#include "orbicoh/error.hpp"

namespace orbicoh {

CharacteristicFunction::CharacteristicFunction(int n, std::vector<IntVector> vectors)
    : n_(n), vectors_(std::move(vectors)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::CountMismatch: return "CountMismatch";
    case Violation::Kind::WrongDimension: return "WrongDimension";
    case Violation::Kind::NotPrimitive: return "NotPrimitive";
    case Violation::Kind::Dependent: return "Dependent";
  }
  return "Unknown";
}

namespace {

IntMatrix facet_matrix(const CharacteristicFunction& v, const FacetSet& facets) {
  std::vector<IntVector> cols;
  for (int i : facets) cols.push_back(v.vector(i));
  return IntMatrix::from_columns(static_cast<std::size_t>(v.dimension()), cols);
}

// Facets of `face` (faces one dimension down), in face order, each with the
// original facet j such that it is a component of face ∩ Q_j.
std::vector<std::pair<FaceId, int>> subfacets(const FacePoset& p, FaceId face) {
  std::vector<std::pair<FaceId, int>> out;
  const auto& outer = p.face(face).facets;
  for (FaceId g : p.facets_of(face)) {
    const auto& inner = p.face(g).facets;
    FacetSet extra;
    std::set_difference(inner.begin(), inner.end(), outer.begin(), outer.end(),
                        std::back_inserter(extra));
    out.emplace_back(g, extra.at(0));
  }
  return out;
}

std::vector<IntVector> induced_vectors(const FacePoset& p, const CharacteristicFunction& v,
                                       FaceId face, const std::vector<std::pair<FaceId, int>>& subs) {
  const auto& facets = p.face(face).facets;
  if (facets.empty()) {
    std::vector<IntVector> out;
    for (const auto& [g, j] : subs) out.push_back(v.vector(j));
    return out;
  }
  IntMatrix proj = quotient_projection(facet_matrix(v, facets));
  std::vector<IntVector> out;
  for (const auto& [g, j] : subs) {
    IntVector image = proj * v.vector(j);
    if (is_zero(image))
      throw Error(ErrorCode::InconsistentInput,
                  "v_" + std::to_string(j) + " lies in the span at " + p.face_label(g));
    out.push_back(primitivize(image).first);
  }
  return out;
}

}  // namespace

ValidationReport validate(const FacePoset& p, const CharacteristicFunction& v) {
  ValidationReport report;
  const auto m = static_cast<std::size_t>(p.facet_count());
  if (v.facet_count() != m) {
    report.violations.push_back({Violation::Kind::CountMismatch, std::nullopt, std::nullopt,
                                 "expected " + std::to_string(m) + " vectors, got " +
                                     std::to_string(v.facet_count())});
    return report;
  }
  if (v.dimension() != p.dimension()) {
    report.violations.push_back({Violation::Kind::WrongDimension, std::nullopt, std::nullopt,
                                 "vectors live in Z^" + std::to_string(v.dimension()) +
                                     " but the poset has dimension " + std::to_string(p.dimension())});
    return report;
  }
  bool shapes_ok = true;
  for (int i = 0; i < static_cast<int>(m); ++i) {
    const auto& vec = v.vector(i);
    if (static_cast<int>(vec.size()) != v.dimension()) {
      report.violations.push_back({Violation::Kind::WrongDimension, i, std::nullopt,
                                   "v_" + std::to_string(i) + " has " + std::to_string(vec.size()) +
                                       " entries"});
      shapes_ok = false;
    } else if (content(vec) != 1) {
      report.violations.push_back({Violation::Kind::NotPrimitive, i, std::nullopt,
                                   "v_" + std::to_string(i) + " = " + to_string(vec) +
                                       " is not primitive"});
    }
  }
  if (!shapes_ok) return report;
  for (const auto& f : p.faces()) {
    if (f.facets.empty()) continue;
    if (rank(facet_matrix(v, f.facets)) != f.facets.size())
      report.violations.push_back({Violation::Kind::Dependent, std::nullopt, f.id,
                                   "vectors at " + p.face_label(f.id) + " are linearly dependent"});
  }
  return report;
}

Index nhat_index(const CharacteristicFunction& v) {
  return lattice_index(IntMatrix::from_columns(static_cast<std::size_t>(v.dimension()), v.vectors()));
}

InducedPair induced(const FacePoset& p, const CharacteristicFunction& v, FaceId face) {
  const Face& f = p.face(face);
  if (f.dim == 0)
    throw Error(ErrorCode::ZeroDimensionalFace, p.face_label(face) + " is a vertex");
  if (f.facets.empty()) {
    std::vector<FaceId> faces(p.size());
    std::vector<int> facets(static_cast<std::size_t>(p.facet_count()));
    for (std::size_t k = 0; k < faces.size(); ++k) faces[k] = k;
    for (std::size_t k = 0; k < facets.size(); ++k) facets[k] = static_cast<int>(k);
    return {p, v, faces, facets};
  }

  auto subs = subfacets(p, face);
  auto vectors = induced_vectors(p, v, face, subs);
  auto below = p.faces_below(face);

  std::vector<FacetSet> facet_sets;
  for (FaceId g : below) {
    FacetSet fs;
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (p.leq(g, subs[k].first)) fs.push_back(static_cast<int>(k));
    facet_sets.push_back(std::move(fs));
  }
  std::vector<std::vector<bool>> leq(below.size(), std::vector<bool>(below.size()));
  for (std::size_t a = 0; a < below.size(); ++a)
    for (std::size_t b = 0; b < below.size(); ++b) leq[a][b] = p.leq(below[a], below[b]);

  auto sub_poset = FacePoset::from_order(f.dim, static_cast<int>(subs.size()), facet_sets, leq,
                                         p.polytopal());
  // from_order sorts faces; recover the origin of each by matching facet
  // sets and order against the original list.
  std::vector<FaceId> origin(sub_poset.size());
  for (const auto& sf : sub_poset.faces()) {
    for (std::size_t a = 0; a < below.size(); ++a) {
      if (facet_sets[a] != sf.facets) continue;
      // Components with equal facet sets keep their relative order.
      int rank_in_set = 0;
      for (std::size_t b = 0; b < a; ++b) rank_in_set += facet_sets[b] == sf.facets ? 1 : 0;
      if (rank_in_set == sf.component) origin[sf.id] = below[a];
    }
  }
  std::vector<int> facet_origin;
  for (const auto& [g, j] : subs) facet_origin.push_back(j);
  return {std::move(sub_poset), CharacteristicFunction(f.dim, std::move(vectors)), std::move(origin),
          std::move(facet_origin)};
}

MuTable mu_table(const FacePoset& p, const CharacteristicFunction& v) {
  MuTable table;
  table.reserve(p.size());
  for (const auto& f : p.faces()) {
    if (f.dim == 0) {
      table.emplace_back(Integer(1));
      continue;
    }
    auto vectors = induced_vectors(p, v, f.id, subfacets(p, f.id));
    table.push_back(lattice_index(IntMatrix::from_columns(static_cast<std::size_t>(f.dim), vectors)));
  }
  return table;
}

VertexDetTable vertex_dets(const FacePoset& p, const CharacteristicFunction& v) {
  VertexDetTable out;
  for (FaceId q : p.vertices()) out[q] = abs(determinant(facet_matrix(v, p.face(q).facets)));
  return out;
}

std::optional<FaceId> exists_coprime_vertex(const FacePoset& p, const CharacteristicFunction& v,
                                            const Integer& prime) {
  for (const auto& [q, det] : vertex_dets(p, v))
    if (gcd(det, prime) == 1) return q;
  return std::nullopt;
}

}  // namespace orbicoh
