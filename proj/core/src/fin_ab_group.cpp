#include "orbicoh/fin_ab_group.hpp"

#include <algorithm>
#include <sstream>

namespace orbicoh {

FinAbGroup FinAbGroup::free(std::size_t rank) {
  FinAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) {
  return from_cyclic_orders(0, {order});
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders) {
  FinAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> t;
  for (auto& o : orders) {
    o = abs(o);
    if (o == 0)
      ++g.free_rank_;
    else if (o != 1)
      t.push_back(o);
  }
  // diag(a, b) ~ diag(gcd, lcm); after pass i, t[i] divides every later entry.
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer gg = gcd(t[i], t[j]);
      Integer ll = lcm(t[i], t[j]);
      t[i] = gg;
      t[j] = ll;
    }
  for (auto& x : t)
    if (x != 1) g.torsion_.push_back(x);
  return g;
}

Integer FinAbGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

bool FinAbGroup::has_p_torsion(const Integer& p) const {
  return std::any_of(torsion_.begin(), torsion_.end(),
                     [&](const Integer& t) { return divides(p, t); });
}

FinAbGroup FinAbGroup::torsion_part() const { return from_cyclic_orders(0, torsion_); }

FinAbGroup operator+(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.torsion_;
  orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
  return FinAbGroup::from_cyclic_orders(a.free_rank_ + b.free_rank_, std::move(orders));
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  const char* sep = "";
  if (free_rank_ == 1) {
    os << "Z";
    sep = " ⊕ ";
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    sep = " ⊕ ";
  }
  for (const auto& t : torsion_) {
    os << sep << "Z/" << t.get_str();
    sep = " ⊕ ";
  }
  return os.str();
}

}  // namespace orbicoh
