#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicoh/integer.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/poset.hpp"

namespace orbicoh {

/// Assignment facet i -> v_i in Z^n. Construction only checks n >= 1; use
/// validate() against a poset for the primitivity and independence rules.
class CharacteristicFunction {
 public:
  CharacteristicFunction(int n, std::vector<IntVector> vectors);

  int dimension() const noexcept { return n_; }
  std::size_t facet_count() const noexcept { return vectors_.size(); }
  const IntVector& vector(int facet) const { return vectors_.at(static_cast<std::size_t>(facet)); }
  const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

  friend bool operator==(const CharacteristicFunction&, const CharacteristicFunction&) = default;

 private:
  int n_;
  std::vector<IntVector> vectors_;
};

struct Violation {
  enum class Kind { CountMismatch, WrongDimension, NotPrimitive, Dependent };
  Kind kind;
  std::optional<int> facet;
  std::optional<FaceId> face;
  std::string message;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const FacePoset& p, const CharacteristicFunction& v);

/// |N / N-hat| for N-hat spanned by all v_i.
Index nhat_index(const CharacteristicFunction& v);

/// The face F as a manifold with corners of its own, with the induced
/// characteristic function. face_origin[k] is the face of the original
/// poset behind face k of the result, facet_origin[k] the original facet j
/// whose intersection with F gives facet k.
struct InducedPair {
  FacePoset poset;
  CharacteristicFunction v;
  std::vector<FaceId> face_origin;
  std::vector<int> facet_origin;
};

/// Throws Error(ZeroDimensionalFace) for a vertex.
InducedPair induced(const FacePoset& p, const CharacteristicFunction& v, FaceId face);

/// mu(F) for every face, indexed by FaceId.
using MuTable = std::vector<Index>;
MuTable mu_table(const FacePoset& p, const CharacteristicFunction& v);

/// d_Q(q) = |det(v_i : i in I_q)| per vertex.
using VertexDetTable = std::map<FaceId, Integer>;
VertexDetTable vertex_dets(const FacePoset& p, const CharacteristicFunction& v);

/// First vertex (in face order) whose determinant is prime to p.
std::optional<FaceId> exists_coprime_vertex(const FacePoset& p, const CharacteristicFunction& v,
                                            const Integer& prime);

}  // namespace orbicoh
