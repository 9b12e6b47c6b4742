#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbicoh/integer.hpp"

namespace orbicoh {

/// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_s in invariant
/// factor form: t_1 | t_2 | ... | t_s and every t_i >= 2. Two groups are
/// isomorphic exactly when their representations compare equal.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup free(std::size_t rank);
  static FinAbGroup cyclic(const Integer& order);
  /// Canonicalizes an arbitrary list of cyclic orders. A 0 entry contributes
  /// a free summand, entries of absolute value 1 are dropped.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_torsion_free() const noexcept { return torsion_.empty(); }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  bool has_p_torsion(const Integer& p) const;

  FinAbGroup torsion_part() const;
  friend FinAbGroup operator+(const FinAbGroup& a, const FinAbGroup& b);
  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) = default;

  /// "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/6", ...
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace orbicoh
