#include "mbx/error.hpp"
#include "mbx/mult.hpp"

namespace mbx::mult {

InducedMatrix induced_matrix(const CharacterTable& parent, const CharacterTable& sub, const group::ClassFusion& fusion) {
  const auto& h = *fusion.embedding.sub;
  bool same = Int(static_cast<unsigned long>(h.order())) == sub.order && h.class_count() == sub.k();
  for (std::size_t a = 0; same && a < sub.k(); ++a) {
    same = Int(static_cast<unsigned long>(fusion.z_sub[a])) == sub.centralizers[a];
  }
  if (!same) throw FusionMismatch("fusion subgroup " + h.name() + " does not match table " + sub.name);

  InducedMatrix m;
  m.index = parent.order / sub.order;
  m.parent_degrees = parent.degrees;
  m.sub_degrees = sub.degrees;
  m.entries.assign(parent.k(), std::vector<Int>(sub.k()));
  for (std::size_t rho = 0; rho < parent.k(); ++rho) {
    std::vector<chartab::Cyclotomic> down = chartab::restrict(parent, fusion, rho);
    for (std::size_t pi = 0; pi < sub.k(); ++pi) {
      Rational c = chartab::inner_product(sub, down, sub.values[pi]);
      if (c.get_den() != 1 || sgn(c) < 0) {
        throw IntegralityDefect("c(" + std::to_string(rho) + "," + std::to_string(pi) + ") = " + to_string(c));
      }
      m.entries[rho][pi] = c.get_num();
    }
  }
  // sum_rho c rho(1) = [G:H] pi(1) and sum_pi c pi(1) = rho(1)
  for (std::size_t pi = 0; pi < sub.k(); ++pi) {
    Int total = 0;
    for (std::size_t rho = 0; rho < parent.k(); ++rho) total += m.entries[rho][pi] * m.parent_degrees[rho];
    if (total != m.index * m.sub_degrees[pi]) {
      throw IdentityViolation("induced degree of pi_" + std::to_string(pi) + " is " + total.get_str());
    }
  }
  for (std::size_t rho = 0; rho < parent.k(); ++rho) {
    Int total = 0;
    for (std::size_t pi = 0; pi < sub.k(); ++pi) total += m.entries[rho][pi] * m.sub_degrees[pi];
    if (total != m.parent_degrees[rho]) {
      throw IdentityViolation("restricted degree of rho_" + std::to_string(rho) + " is " + total.get_str());
    }
  }
  return m;
}

InducedMax induced_max(const InducedMatrix& m) {
  InducedMax best{Int(-1), 0, 0};
  for (std::size_t rho = 0; rho < m.entries.size(); ++rho) {
    for (std::size_t pi = 0; pi < m.entries[rho].size(); ++pi) {
      if (m.entries[rho][pi] > best.value) best = {m.entries[rho][pi], rho, pi};
    }
  }
  return best;
}

Int induced_sum_squares(const InducedMatrix& m) {
  Int sum = 0;
  for (const auto& row : m.entries) {
    for (const Int& c : row) sum += c * c;
  }
  return sum;
}

Rational LR_rhs(const group::ClassFusion& fusion) {
  Rational sum = 0;
  for (std::size_t i = 0; i < fusion.fusion.size(); ++i) {
    sum += Rational(Int(static_cast<unsigned long>(fusion.z_parent[i])), Int(static_cast<unsigned long>(fusion.z_sub[i])));
  }
  sum.canonicalize();
  return sum;
}

}  // namespace mbx::mult
