#pragma once

// A finite p-group under one or both engines. Groups of order at most
// dense_capacity always carry a multiplication table; larger ones carry only
// permutation generators and support the reduced operation set.

#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "pgrp/dense.hpp"
#include "pgrp/perm.hpp"

namespace pgrp {

enum class Engine { dense, perm };

class Group {
 public:
  Group() = default;

  static Group from_dense(DenseGroupPtr dense);
  /// Builds the dense table as well when the order fits.
  static Group from_perm(PermGroup perm, std::optional<std::vector<Perm>> rank_witness = {});

  unsigned prime() const { return prime_; }
  unsigned order_exponent() const { return exponent_; }
  Engine engine() const { return dense_ ? Engine::dense : Engine::perm; }
  bool has_dense() const { return static_cast<bool>(dense_); }

  /// Throws Errc::capacity when the group is beyond dense capacity.
  const DenseGroupPtr& dense() const;
  /// Like dense(), but reports Errc::unsupported_on_engine naming `op`.
  const DenseGroupPtr& dense_for(std::string_view op) const;
  /// Stored permutation generators, or the right regular representation.
  PermGroup to_perm() const;
  /// Permutation image of a dense element under to_perm().
  Perm element_perm(Elem x) const;

  /// Commuting order-p permutations spanning an elementary abelian subgroup
  /// of to_perm(); a lower bound on the p-rank when no table is available.
  std::vector<Perm> rank_witness() const;

 private:
  unsigned prime_ = 3;
  unsigned exponent_ = 0;
  DenseGroupPtr dense_;
  std::optional<PermGroup> perm_;
  std::vector<Perm> element_perms_;  // dense index -> permutation, when perm_ is set
  std::optional<std::vector<Perm>> witness_;
};

Group cyclic(unsigned p, unsigned k);
Group elementary_abelian(unsigned p, unsigned rank);
/// Extraspecial group of order p^(1+2m); exponent p (Heisenberg) or p^2.
Group extraspecial(unsigned p, std::uint64_t order, std::uint64_t exponent);
Group direct_product(const Group& a, const Group& b);
/// A wr C_p with the base acting on p copies of A's permutation domain.
Group wreath(const Group& a, unsigned p);

/// Table from a coordinate encoding: elements are mixed-radix tuples
/// (first coordinate least significant), the zero tuple is the identity.
Group group_from_coordinates(unsigned p, const std::vector<unsigned>& radices,
                             const std::function<std::vector<unsigned>(
                                 const std::vector<unsigned>&, const std::vector<unsigned>&)>& mul,
                             const std::vector<std::vector<unsigned>>& gens);

/// Engine-independent structure queries.
unsigned nilpotency_class(const Group& g);
/// Derived series length minus one (0 for the trivial group).
unsigned derived_length(const Group& g);
bool is_metabelian(const Group& g);
bool is_maximal_class(const Group& g);
/// Nilpotency class of the derived subgroup.
unsigned derived_subgroup_class(const Group& g);

/// Dense-only queries; a permutation-engine group raises
/// Errc::unsupported_on_engine (Errc::capacity for normal_subgroups).
Subgroup center(const Group& g);
Chain upper_central_series(const Group& g);
std::vector<Subgroup> elementary_abelian_subgroups(const Group& g);
std::vector<Subgroup> normal_subgroups(const Group& g);

struct RankInfo {
  unsigned value = 0;
  bool exact = false;  // false: value is a verified lower bound
};
RankInfo rank_info(const Group& g);

std::string format_order(unsigned p, unsigned exponent);

}  // namespace pgrp
