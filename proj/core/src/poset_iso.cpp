#include <algorithm>
#include <functional>
#include <map>

#include "orbicoh/poset.hpp"

namespace orbicoh {

namespace {

// Faces below facet i, bucketed by dimension.
using Histogram = std::vector<int>;

Histogram dim_histogram(const FacePoset& p) {
  Histogram h(static_cast<std::size_t>(p.dimension() + 1), 0);
  for (const auto& f : p.faces()) ++h[static_cast<std::size_t>(f.dim)];
  return h;
}

// counts[i][k][d]: faces of dimension d lying on both facets i and k.
std::vector<std::vector<Histogram>> pair_counts(const FacePoset& p) {
  const auto m = static_cast<std::size_t>(p.facet_count());
  const auto dims = static_cast<std::size_t>(p.dimension() + 1);
  std::vector<std::vector<Histogram>> counts(m, std::vector<Histogram>(m, Histogram(dims, 0)));
  for (const auto& f : p.faces())
    for (int i : f.facets)
      for (int k : f.facets)
        ++counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(f.dim)];
  return counts;
}

class Matcher {
 public:
  Matcher(const FacePoset& a, const FacePoset& b)
      : a_(a), b_(b), ca_(pair_counts(a)), cb_(pair_counts(b)) {}

  std::optional<PosetIsomorphism> run() {
    const auto m = static_cast<std::size_t>(a_.facet_count());
    facet_map_.assign(m, -1);
    used_facet_.assign(m, false);
    if (match_facet(0)) return PosetIsomorphism{facet_map_, face_map_};
    return std::nullopt;
  }

 private:
  bool match_facet(std::size_t i) {
    const auto m = static_cast<std::size_t>(a_.facet_count());
    if (i == m) return match_faces();
    for (std::size_t j = 0; j < m; ++j) {
      if (used_facet_[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) {
        std::size_t jk = k == i ? j : static_cast<std::size_t>(facet_map_[k]);
        ok = ca_[i][k] == cb_[j][jk];
      }
      if (!ok) continue;
      facet_map_[i] = static_cast<int>(j);
      used_facet_[j] = true;
      if (match_facet(i + 1)) return true;
      used_facet_[j] = false;
    }
    facet_map_[i] = -1;
    return false;
  }

  bool match_faces() {
    face_map_.assign(a_.size(), b_.size());
    used_face_.assign(b_.size(), false);
    return match_face(0);
  }

  bool match_face(FaceId x) {
    if (x == a_.size()) return true;
    FacetSet image;
    for (int i : a_.face(x).facets) image.push_back(facet_map_[static_cast<std::size_t>(i)]);
    std::sort(image.begin(), image.end());
    for (FaceId y : b_.faces_with(image)) {
      if (used_face_[y]) continue;
      bool ok = true;
      for (FaceId x0 = 0; x0 < x && ok; ++x0) {
        FaceId y0 = face_map_[x0];
        ok = a_.leq(x, x0) == b_.leq(y, y0) && a_.leq(x0, x) == b_.leq(y0, y);
      }
      if (!ok) continue;
      face_map_[x] = y;
      used_face_[y] = true;
      if (match_face(x + 1)) return true;
      used_face_[y] = false;
    }
    return false;
  }

  const FacePoset& a_;
  const FacePoset& b_;
  std::vector<std::vector<Histogram>> ca_, cb_;
  std::vector<int> facet_map_;
  std::vector<bool> used_facet_;
  std::vector<FaceId> face_map_;
  std::vector<bool> used_face_;
};

}  // namespace

std::optional<PosetIsomorphism> find_isomorphism(const FacePoset& a, const FacePoset& b) {
  if (a.dimension() != b.dimension() || a.facet_count() != b.facet_count() || a.size() != b.size())
    return std::nullopt;
  if (dim_histogram(a) != dim_histogram(b)) return std::nullopt;
  return Matcher(a, b).run();
}

Classification classify_detailed(const FacePoset& p) {
  const int n = p.dimension();
  const std::pair<PosetClass, int> candidates[] = {
      {PosetClass::Simplex, 1}, {PosetClass::Diamond, 2}, {PosetClass::Prism, 2}};
  for (auto [kind, min_n] : candidates) {
    if (n < min_n) continue;
    int m = kind == PosetClass::Simplex ? n + 1 : kind == PosetClass::Diamond ? n : n + 2;
    if (p.facet_count() != m) continue;
    auto ref = reference_poset(kind, n);
    if (auto iso = find_isomorphism(ref, p)) return {kind, std::move(iso)};
  }
  return {};
}

}  // namespace orbicoh
