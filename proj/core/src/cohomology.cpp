#include "orbicoh/cohomology.hpp"

#include <set>

#include "orbicoh/error.hpp"
#include "orbicoh/lattice.hpp"

namespace orbicoh {

namespace {

const char* kH1Note =
    "the H_1(Q_I; Z/p) = 0 half of the necessary condition is not checked (no topology of Q)";

IntMatrix vector_matrix(const CharacteristicFunction& v) {
  return IntMatrix::from_columns(static_cast<std::size_t>(v.dimension()), v.vectors());
}

void require_valid(const FacePoset& p, const CharacteristicFunction& v) {
  auto report = validate(p, v);
  if (!report.ok())
    throw Error(ErrorCode::InconsistentInput, report.violations.front().message);
}

}  // namespace

AssumptionFlags AssumptionFlags::defaults_for(const FacePoset& p) {
  AssumptionFlags flags;
  flags.face_acyclic = p.polytopal();
  return flags;
}

bool AssumptionFlags::p_acyclic(const Integer& p) const {
  if (face_acyclic) return true;
  auto it = face_p_acyclic.find(p);
  return it != face_p_acyclic.end() && it->second;
}

std::string to_string(const CohomologyGroup& g) {
  if (std::holds_alternative<ZeroOrTorsion>(g)) return "0 or finite";
  return std::get<FinAbGroup>(g).to_string();
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::HasPTorsion: return "HasPTorsion";
    case Decision::NoPTorsion: return "NoPTorsion";
    case Decision::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

CohomologyReport boundary_degrees(const FacePoset& p, const CharacteristicFunction& v,
                                  const AssumptionFlags& flags) {
  const int n = p.dimension();
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "boundary degrees need n >= 2");
  if (!flags.face_acyclic)
    throw Error(ErrorCode::MissingAssumption,
                "face_acyclic must be declared; H_1(Q) and H_2(Q) are not computable here");
  require_valid(p, v);

  const IntMatrix vm = vector_matrix(v);
  const auto m = static_cast<std::size_t>(p.facet_count());
  CohomologyReport report;
  report.dimension = n;
  report.degrees[0] = FinAbGroup::free(1);
  report.degrees[2 * n] = FinAbGroup::free(1);
  report.degrees[2 * n - 1] = cokernel(vm);
  report.degrees[2 * n - 2] = FinAbGroup::free(m - rank(vm)) +
                              wedge_square_quotient(static_cast<std::size_t>(n), v.vectors());
  if (p.vertex_count() > 0) {
    report.degrees[1] = FinAbGroup{};
    report.degrees[2] = FinAbGroup::free(m - static_cast<std::size_t>(n));
  }
  return report;
}

CohomologyReport full_report_low_dim(const FacePoset& p, const CharacteristicFunction& v,
                                     const AssumptionFlags& flags) {
  const int n = p.dimension();
  if (n != 2 && n != 3)
    throw Error(ErrorCode::InvalidArgument, "full report only for n = 2 or 3");
  if (p.vertex_count() == 0)
    throw Error(ErrorCode::InconsistentInput, "full report needs Q to have a vertex");
  const auto m = static_cast<std::size_t>(p.facet_count());
  if (n == 3 && p.vertex_count() != 2 * m - 4)
    throw Error(ErrorCode::InconsistentInput,
                "vertex count " + std::to_string(p.vertex_count()) + " differs from 2m - 4 = " +
                    std::to_string(2 * m - 4) + "; boundary of Q is not a 2-sphere");
  CohomologyReport report = boundary_degrees(p, v, flags);
  if (n == 3) report.degrees[3] = ZeroOrTorsion{};
  return report;
}

std::optional<TorsionVerdict> necessary_condition(const FacePoset& p, const MuTable& mu,
                                                  const Integer& prime) {
  for (const auto& f : p.faces()) {
    const Index& value = mu.at(f.id);
    if (value.is_coprime_to(prime)) continue;
    TorsionVerdict verdict;
    verdict.prime = prime;
    verdict.decision = Decision::HasPTorsion;
    verdict.witness = f.id;
    verdict.notes.push_back("mu(" + p.face_label(f.id) + ") = " + value.to_string() +
                            (value.is_infinite() ? " is infinite" : " is divisible by " + prime.get_str()));
    return verdict;
  }
  return std::nullopt;
}

std::optional<TorsionVerdict> necessary_condition(const FacePoset& p, const CharacteristicFunction& v,
                                                  const Integer& prime) {
  return necessary_condition(p, mu_table(p, v), prime);
}

TorsionVerdict sufficient_condition(const FacePoset& p, const MuTable& mu, const Integer& prime,
                                    const AssumptionFlags& flags) {
  if (!flags.p_acyclic(prime))
    throw Error(ErrorCode::MissingAssumption,
                "Q must be declared face " + prime.get_str() + "-acyclic");
  TorsionVerdict verdict;
  verdict.prime = prime;
  const auto cls = classify_detailed(p);
  auto check = [&](FaceId id) {
    if (mu.at(id).is_coprime_to(prime)) return true;
    verdict.notes.push_back("mu(" + p.face_label(id) + ") = " + mu.at(id).to_string() +
                            " is not prime to " + prime.get_str());
    return false;
  };

  bool ok = false;
  switch (cls.kind) {
    case PosetClass::Diamond:
    case PosetClass::Simplex:
      ok = check(p.top());
      break;
    case PosetClass::Prism: {
      const int n = p.dimension();
      const auto& fm = cls.from_reference->facet_map;
      FaceId plus = p.facet(fm[static_cast<std::size_t>(n)]);
      FaceId minus = p.facet(fm[static_cast<std::size_t>(n + 1)]);
      bool top = check(p.top());
      bool a = check(plus);
      bool b = check(minus);
      ok = top && a && b;
      break;
    }
    case PosetClass::Other:
      verdict.notes.push_back(
          "poset is not a diamond, simplex or prism; absence of torsion is not decided");
      break;
  }
  if (ok) {
    verdict.decision = Decision::NoPTorsion;
    verdict.proved_case = cls.kind;
  } else {
    verdict.decision = Decision::Inconclusive;
  }
  return verdict;
}

TorsionVerdict sufficient_condition(const FacePoset& p, const CharacteristicFunction& v,
                                    const Integer& prime, const AssumptionFlags& flags) {
  return sufficient_condition(p, mu_table(p, v), prime, flags);
}

std::vector<TorsionVerdict> analyze(const FacePoset& p, const CharacteristicFunction& v,
                                    const AssumptionFlags& flags,
                                    const std::vector<Integer>& extra_primes) {
  require_valid(p, v);
  const MuTable mu = mu_table(p, v);
  std::set<Integer> primes;
  for (long q : kBaselinePrimes) primes.insert(Integer(q));
  for (const auto& value : mu)
    if (value.is_finite())
      for (auto& q : prime_factors(value.value())) primes.insert(q);
  for (const auto& [q, det] : vertex_dets(p, v))
    for (auto& r : prime_factors(det)) primes.insert(r);
  for (const auto& q : extra_primes) {
    if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, q.get_str() + " is not prime");
    primes.insert(q);
  }

  std::vector<TorsionVerdict> out;
  for (const auto& q : primes) {
    if (auto verdict = necessary_condition(p, mu, q)) {
      out.push_back(std::move(*verdict));
      continue;
    }
    TorsionVerdict verdict;
    try {
      verdict = sufficient_condition(p, mu, q, flags);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingAssumption) throw;
      verdict.prime = q;
      verdict.decision = Decision::Inconclusive;
      verdict.notes.push_back(e.what());
    }
    verdict.notes.push_back(std::string("every mu is finite and prime to p; ") + kH1Note);
    out.push_back(std::move(verdict));
  }
  return out;
}

}  // namespace orbicoh
