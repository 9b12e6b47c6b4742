#include "orbicoh/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::string to_string(PosetClass c) {
  switch (c) {
    case PosetClass::Simplex: return "Simplex";
    case PosetClass::Diamond: return "Diamond";
    case PosetClass::Prism: return "Prism";
    case PosetClass::Other: return "Other";
  }
  return "Other";
}

namespace {

bool is_subset(const FacetSet& small, const FacetSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string facets_string(const FacetSet& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

// Union-find over vertex indices.
struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FacePoset FacePoset::from_order(int n, int m, std::vector<FacetSet> facet_sets,
                                std::vector<std::vector<bool>> leq, bool polytopal) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "facet count must be >= 0");
  const std::size_t count = facet_sets.size();
  if (leq.size() != count)
    throw Error(ErrorCode::InconsistentInput, "order relation has wrong size");
  for (const auto& row : leq)
    if (row.size() != count) throw Error(ErrorCode::InconsistentInput, "order relation is not square");

  for (std::size_t k = 0; k < count; ++k) {
    auto& f = facet_sets[k];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::InconsistentInput, "facet set " + facets_string(f) + " repeats a facet");
    for (int i : f)
      if (i < 0 || i >= m)
        throw Error(ErrorCode::InconsistentInput,
                    "facet index " + std::to_string(i) + " outside [0, " + std::to_string(m) + ")");
    if (static_cast<int>(f.size()) > n)
      throw Error(ErrorCode::NotNice, "face " + facets_string(f) + " lies on more than n facets");
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = facet_sets[a];
    const auto& fb = facet_sets[b];
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    return fa < fb;
  });

  FacePoset p;
  p.n_ = n;
  p.m_ = m;
  p.polytopal_ = polytopal;
  p.faces_.resize(count);
  p.leq_.assign(count, std::vector<bool>(count, false));
  std::map<FacetSet, int> seen;
  for (std::size_t k = 0; k < count; ++k) {
    Face& face = p.faces_[k];
    face.id = k;
    face.facets = facet_sets[order[k]];
    face.component = seen[face.facets]++;
    face.dim = n - static_cast<int>(face.facets.size());
    for (std::size_t l = 0; l < count; ++l) p.leq_[k][l] = leq[order[k]][order[l]];
  }

  if (count == 0 || !p.faces_[0].facets.empty() || (count > 1 && p.faces_[1].facets.empty()))
    throw Error(ErrorCode::NotNice, "poset must contain exactly one face with no facets (Q itself)");

  p.facet_ids_.assign(static_cast<std::size_t>(m), count);
  for (const auto& face : p.faces_) {
    if (face.facets.size() != 1) continue;
    auto& slot = p.facet_ids_[static_cast<std::size_t>(face.facets[0])];
    if (slot != count)
      throw Error(ErrorCode::NotNice, "facet " + std::to_string(face.facets[0]) + " is disconnected");
    slot = face.id;
  }
  for (int i = 0; i < m; ++i)
    if (p.facet_ids_[static_cast<std::size_t>(i)] == count)
      throw Error(ErrorCode::InconsistentInput, "facet " + std::to_string(i) + " does not appear");

  if (auto why = p.niceness_violation()) throw Error(ErrorCode::NotNice, *why);
  return p;
}

std::optional<std::string> FacePoset::niceness_violation() const {
  const std::size_t count = faces_.size();
  if (count == 0 || !faces_[0].facets.empty()) return "face 0 is not Q";
  std::map<FacetSet, std::vector<FaceId>> by_facets;
  for (const auto& f : faces_) by_facets[f.facets].push_back(f.id);

  for (std::size_t a = 0; a < count; ++a) {
    if (!leq_[a][a]) return "order is not reflexive at " + face_label(a);
    if (!leq_[a][0]) return face_label(a) + " is not contained in Q";
    if (faces_[a].dim != n_ - static_cast<int>(faces_[a].facets.size()))
      return "grading mismatch at " + face_label(a);
    for (std::size_t b = 0; b < count; ++b) {
      if (!leq_[a][b]) continue;
      if (a != b && leq_[b][a]) return "order is not antisymmetric";
      if (!is_subset(faces_[b].facets, faces_[a].facets))
        return face_label(a) + " <= " + face_label(b) + " but facet sets are not reverse-nested";
      if (a != b && faces_[a].dim >= faces_[b].dim) return "order does not respect dimension";
      for (std::size_t c = 0; c < count; ++c)
        if (leq_[b][c] && !leq_[a][c]) return "order is not transitive";
    }
    for (int i = 0; i < m_; ++i) {
      bool in_facet = std::binary_search(faces_[a].facets.begin(), faces_[a].facets.end(), i);
      if (leq_[a][facet_ids_[static_cast<std::size_t>(i)]] != in_facet)
        return face_label(a) + " and facet " + std::to_string(i) + " disagree on containment";
    }
    // Near any point of the face, Q looks like a corner: every subset J of
    // its facet set gives exactly one face Q_J through it.
    const auto& fs = faces_[a].facets;
    const std::size_t k = fs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      FacetSet sub;
      for (std::size_t t = 0; t < k; ++t)
        if (mask & (std::size_t{1} << t)) sub.push_back(fs[t]);
      auto it = by_facets.find(sub);
      std::size_t above = 0;
      if (it != by_facets.end())
        for (FaceId b : it->second) above += leq_[a][b] ? 1 : 0;
      if (above != 1)
        return face_label(a) + " lies in " + std::to_string(above) + " components of Q_" +
               facets_string(sub);
    }
  }
  return std::nullopt;
}

FacePoset FacePoset::from_vertex_facets(int n, std::span<const FacetSet> vertices) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (vertices.empty()) throw Error(ErrorCode::InconsistentInput, "no vertices given");
  std::vector<FacetSet> verts(vertices.begin(), vertices.end());
  int m = 0;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    auto& f = verts[v];
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) != n || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::InconsistentInput,
                  "vertex " + std::to_string(v) + " must lie on exactly n = " + std::to_string(n) +
                      " distinct facets");
    if (f.front() < 0) throw Error(ErrorCode::InconsistentInput, "negative facet index");
    m = std::max(m, f.back() + 1);
  }
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (const auto& f : verts)
    for (int i : f) used[static_cast<std::size_t>(i)] = true;
  for (int i = 0; i < m; ++i)
    if (!used[static_cast<std::size_t>(i)])
      throw Error(ErrorCode::InconsistentInput, "facet " + std::to_string(i) + " has no vertex");

  std::map<FacetSet, std::vector<std::size_t>> containing;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const auto& f = verts[v];
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      FacetSet sub;
      for (int t = 0; t < n; ++t)
        if (mask & (std::size_t{1} << t)) sub.push_back(f[static_cast<std::size_t>(t)]);
      containing[sub].push_back(v);
    }
  }

  // Edges: every Q_J with |J| = n - 1 is an arc joining exactly two vertices.
  std::vector<std::pair<FacetSet, std::pair<std::size_t, std::size_t>>> edges;
  for (const auto& [facets, vs] : containing) {
    if (static_cast<int>(facets.size()) != n - 1) continue;
    if (vs.size() != 2)
      throw Error(ErrorCode::InconsistentInput,
                  "edge Q_" + facets_string(facets) + " has " + std::to_string(vs.size()) +
                      " endpoints; expected 2");
    edges.push_back({facets, {vs[0], vs[1]}});
  }

  std::vector<FacetSet> facet_sets;
  std::vector<std::vector<std::size_t>> vertex_sets;
  for (const auto& [facets, vs] : containing) {
    if (static_cast<int>(facets.size()) == n) {
      for (auto v : vs) {
        facet_sets.push_back(facets);
        vertex_sets.push_back({v});
      }
      continue;
    }
    Components uf(verts.size());
    for (const auto& [ef, ends] : edges)
      if (is_subset(facets, ef)) uf.unite(ends.first, ends.second);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (auto v : vs) groups[uf.find(v)].push_back(v);
    if (facets.empty() && groups.size() != 1)
      throw Error(ErrorCode::InconsistentInput, "vertex data describes a disconnected Q");
    // Order components by smallest vertex for reproducibility.
    std::vector<std::vector<std::size_t>> comps;
    for (auto& [root, members] : groups) comps.push_back(std::move(members));
    std::sort(comps.begin(), comps.end());
    for (auto& c : comps) {
      facet_sets.push_back(facets);
      vertex_sets.push_back(std::move(c));
    }
  }

  const std::size_t count = facet_sets.size();
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      leq[a][b] = is_subset(facet_sets[b], facet_sets[a]) &&
                  std::includes(vertex_sets[b].begin(), vertex_sets[b].end(),
                                vertex_sets[a].begin(), vertex_sets[a].end());
  return from_order(n, m, std::move(facet_sets), std::move(leq), true);
}

FacePoset FacePoset::from_faces(int n, int m, std::span<const FaceSpec> faces) {
  const std::size_t count = faces.size() + 1;  // plus Q at the end
  std::vector<FacetSet> facet_sets;
  std::vector<std::vector<std::size_t>> children(count);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (faces[k].facets.empty())
      throw Error(ErrorCode::InconsistentInput, "Q is implicit and must not be listed");
    facet_sets.push_back(faces[k].facets);
    for (auto c : faces[k].covers) {
      if (c >= faces.size() || c == k)
        throw Error(ErrorCode::InconsistentInput,
                    "face " + std::to_string(k) + " covers invalid face index " + std::to_string(c));
      children[k].push_back(c);
    }
    if (faces[k].facets.size() == 1) children[count - 1].push_back(k);
  }
  facet_sets.emplace_back();

  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t top = 0; top < count; ++top) {
    std::vector<std::size_t> stack{top};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (leq[x][top]) continue;
      leq[x][top] = true;
      for (auto c : children[x]) stack.push_back(c);
    }
  }
  return from_order(n, m, std::move(facet_sets), std::move(leq), false);
}

std::vector<FaceId> FacePoset::faces_below(FaceId id) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (leq_[f.id][id]) out.push_back(f.id);
  return out;
}

std::vector<FaceId> FacePoset::facets_of(FaceId id) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.dim == faces_[id].dim - 1 && leq_[f.id][id]) out.push_back(f.id);
  return out;
}

std::vector<FaceId> FacePoset::vertices() const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.dim == 0) out.push_back(f.id);
  return out;
}

std::size_t FacePoset::vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.dim == 0; }));
}

std::vector<FaceId> FacePoset::faces_with(const FacetSet& facets) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.facets == facets) out.push_back(f.id);
  return out;
}

std::string FacePoset::face_label(FaceId id) const {
  const Face& f = faces_.at(id);
  if (f.facets.empty()) return "Q";
  std::string label = "Q" + facets_string(f.facets);
  if (f.component > 0 || (id + 1 < faces_.size() && faces_[id + 1].facets == f.facets))
    label += "#" + std::to_string(f.component);
  return label;
}

std::vector<FacetSet> FacePoset::vertex_facet_sets() const {
  std::vector<FacetSet> out;
  for (const auto& f : faces_)
    if (f.dim == 0) out.push_back(f.facets);
  return out;
}

FacePoset reference_poset(PosetClass kind, int n) {
  std::vector<FacetSet> verts;
  switch (kind) {
    case PosetClass::Simplex:
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "Simplex needs n >= 1");
      for (int i = 0; i <= n; ++i) {
        FacetSet f;
        for (int j = 0; j <= n; ++j)
          if (j != i) f.push_back(j);
        verts.push_back(f);
      }
      break;
    case PosetClass::Diamond: {
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "Diamond needs n >= 2");
      FacetSet all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      verts = {all, all};
      break;
    }
    case PosetClass::Prism:
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "Prism needs n >= 2");
      for (int eps : {n, n + 1})
        for (int i = 0; i < n; ++i) {
          FacetSet f;
          for (int j = 0; j < n; ++j)
            if (j != i) f.push_back(j);
          f.push_back(eps);
          verts.push_back(f);
        }
      break;
    case PosetClass::Other:
      throw Error(ErrorCode::InvalidArgument, "no reference poset for class Other");
  }
  return FacePoset::from_vertex_facets(n, verts);
}

FacePoset vertex_cut(const FacePoset& p, FaceId q) {
  if (q >= p.size() || p.face(q).dim != 0)
    throw Error(ErrorCode::InvalidArgument, "vertex_cut needs a vertex, got face " + std::to_string(q));
  const int new_facet = p.facet_count();
  // Entries are (source face, is a new face F ∩ Q_new).
  std::vector<std::pair<FaceId, bool>> entries;
  for (const auto& f : p.faces())
    if (f.id != q) entries.emplace_back(f.id, false);
  for (const auto& f : p.faces())
    if (f.id != q && p.leq(q, f.id)) entries.emplace_back(f.id, true);

  std::vector<FacetSet> facet_sets;
  for (auto [src, cut] : entries) {
    FacetSet fs = p.face(src).facets;
    if (cut) fs.push_back(new_facet);
    facet_sets.push_back(std::move(fs));
  }
  const std::size_t count = entries.size();
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      auto [fa, cut_a] = entries[a];
      auto [fb, cut_b] = entries[b];
      // Old faces never lie in the new facet; new pieces sit inside every
      // face containing their source.
      leq[a][b] = (!cut_a && cut_b) ? false : p.leq(fa, fb);
    }
  return FacePoset::from_order(p.dimension(), new_facet + 1, std::move(facet_sets), std::move(leq),
                               p.polytopal());
}

FacePoset collapse_facets(const FacePoset& p, const FacetSet& facets) {
  FacetSet s = facets;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "collapse needs at least one facet");
  for (int i : s)
    if (i < 0 || i >= p.facet_count())
      throw Error(ErrorCode::InvalidArgument, "facet " + std::to_string(i) + " out of range");

  auto meets = [&](int i, int j) {
    for (const auto& f : p.faces())
      if (std::binary_search(f.facets.begin(), f.facets.end(), i) &&
          std::binary_search(f.facets.begin(), f.facets.end(), j))
        return true;
    return false;
  };
  std::vector<bool> reached(s.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < s.size(); ++b)
      if (!reached[b] && meets(s[a], s[b])) {
        reached[b] = true;
        stack.push_back(b);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw Error(ErrorCode::CollapseNotNice, "union of facets " + facets_string(s) + " is disconnected");

  auto collapsed = [&](const Face& f) {
    for (int i : f.facets)
      if (std::binary_search(s.begin(), s.end(), i)) return true;
    return false;
  };
  std::vector<bool> touches(static_cast<std::size_t>(p.facet_count()), false);
  for (const auto& f : p.faces())
    if (collapsed(f))
      for (int j : f.facets) touches[static_cast<std::size_t>(j)] = true;

  std::vector<int> renumber(static_cast<std::size_t>(p.facet_count()), -1);
  int next = 0;
  for (int j = 0; j < p.facet_count(); ++j)
    if (!std::binary_search(s.begin(), s.end(), j)) renumber[static_cast<std::size_t>(j)] = next++;

  FacetSet point;
  for (int j = 0; j < p.facet_count(); ++j)
    if (touches[static_cast<std::size_t>(j)] && renumber[static_cast<std::size_t>(j)] >= 0)
      point.push_back(renumber[static_cast<std::size_t>(j)]);
  if (static_cast<int>(point.size()) != p.dimension())
    throw Error(ErrorCode::CollapseNotNice,
                "collapsed point lies on " + std::to_string(point.size()) + " facets, expected " +
                    std::to_string(p.dimension()));

  std::vector<FaceId> kept;
  for (const auto& f : p.faces())
    if (!collapsed(f)) kept.push_back(f.id);
  std::vector<FacetSet> facet_sets;
  for (auto id : kept) {
    FacetSet fs;
    for (int j : p.face(id).facets) fs.push_back(renumber[static_cast<std::size_t>(j)]);
    facet_sets.push_back(std::move(fs));
  }
  facet_sets.push_back(point);

  const std::size_t count = kept.size() + 1;
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b) leq[a][b] = p.leq(kept[a], kept[b]);
  leq[count - 1][count - 1] = true;
  for (std::size_t b = 0; b < kept.size(); ++b)
    for (const auto& c : p.faces())
      if (collapsed(c) && p.leq(c.id, kept[b])) {
        leq[count - 1][b] = true;
        break;
      }
  try {
    return FacePoset::from_order(p.dimension(), next, std::move(facet_sets), std::move(leq),
                                 p.polytopal());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotNice || e.code() == ErrorCode::InconsistentInput)
      throw Error(ErrorCode::CollapseNotNice, e.what());
    throw;
  }
}

}  // namespace orbicoh
