#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbicoh/charfun.hpp"
#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/poset.hpp"

namespace orbicoh {

/// Topological hypotheses on Q that the library cannot check and takes on
/// trust. face_acyclic implies the other two.
struct AssumptionFlags {
  bool face_acyclic = false;
  /// Recorded only; boundary_degrees() asks for face_acyclic.
  bool facet_h1_trivial = false;
  std::map<Integer, bool> face_p_acyclic;

  /// face_acyclic for polytope and fan inputs, nothing otherwise.
  static AssumptionFlags defaults_for(const FacePoset& p);

  bool h1_trivial() const { return face_acyclic || facet_h1_trivial; }
  bool p_acyclic(const Integer& p) const;

  friend bool operator==(const AssumptionFlags&, const AssumptionFlags&) = default;
};

/// H^3 of a 3-dimensional X: finite, but not determined by the invariants.
struct ZeroOrTorsion {
  friend bool operator==(ZeroOrTorsion, ZeroOrTorsion) = default;
};

using CohomologyGroup = std::variant<FinAbGroup, ZeroOrTorsion>;

std::string to_string(const CohomologyGroup& g);

struct CohomologyReport {
  int dimension = 0;
  std::map<int, CohomologyGroup> degrees;

  /// Throws std::out_of_range when the degree was not computed, and
  /// std::bad_variant_access for a symbolic entry.
  const FinAbGroup& group(int degree) const { return std::get<FinAbGroup>(degrees.at(degree)); }
};

/// H^0, H^1, H^2, H^{2n-2}, H^{2n-1}, H^{2n}. Needs n >= 2 and face_acyclic
/// (Error(MissingAssumption) otherwise); H^1 and H^2 also need a vertex.
CohomologyReport boundary_degrees(const FacePoset& p, const CharacteristicFunction& v,
                                  const AssumptionFlags& flags);

/// Every degree for n = 2 or 3; H^3 is symbolic when n = 3.
CohomologyReport full_report_low_dim(const FacePoset& p, const CharacteristicFunction& v,
                                     const AssumptionFlags& flags);

enum class Decision { HasPTorsion, NoPTorsion, Inconclusive };

std::string to_string(Decision d);

struct TorsionVerdict {
  Integer prime;
  Decision decision = Decision::Inconclusive;
  /// Face F with mu(F) infinite or divisible by p (HasPTorsion only).
  std::optional<FaceId> witness;
  /// Poset class whose theorem applies (NoPTorsion only).
  std::optional<PosetClass> proved_case;
  std::vector<std::string> notes;
};

/// HasPTorsion when some face has mu infinite or divisible by p, else none.
std::optional<TorsionVerdict> necessary_condition(const FacePoset& p, const MuTable& mu,
                                                  const Integer& prime);
std::optional<TorsionVerdict> necessary_condition(const FacePoset& p, const CharacteristicFunction& v,
                                                  const Integer& prime);

/// Decides absence of p-torsion for the diamond, simplex and prism shapes.
/// Throws Error(MissingAssumption) unless Q is declared face p-acyclic.
TorsionVerdict sufficient_condition(const FacePoset& p, const MuTable& mu, const Integer& prime,
                                    const AssumptionFlags& flags);
TorsionVerdict sufficient_condition(const FacePoset& p, const CharacteristicFunction& v,
                                    const Integer& prime, const AssumptionFlags& flags);

/// Primes checked by analyze() besides the ones dividing some mu or d_Q.
inline constexpr long kBaselinePrimes[] = {2, 3, 5, 7};

/// One verdict per relevant prime, in increasing order. Relevant primes are
/// the baseline primes, prime factors of finite mu values and vertex
/// determinants, and `extra_primes` (which must be prime).
std::vector<TorsionVerdict> analyze(const FacePoset& p, const CharacteristicFunction& v,
                                    const AssumptionFlags& flags,
                                    const std::vector<Integer>& extra_primes = {});

}  // namespace orbicoh
