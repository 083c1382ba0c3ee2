#pragma once

// Dense engine: a p-group held as a full multiplication table (identity at
// index 0), subgroups as element bitsets, and the subgroup algorithms that
// need every element at hand.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace pgrp {

using Elem = std::uint16_t;

/// |G| <= 3^6; the multiplication table stays near half a million entries.
inline constexpr std::size_t dense_capacity = 729;

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  bool test(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  std::vector<Elem> to_vector() const;
  std::size_t hash() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

class DenseGroup {
 public:
  /// Validates the table: identity at 0, Latin rows and columns, associativity
  /// (every triple up to order 81, else 1000 seeded random triples), p-power
  /// order and element orders. Generators default to a greedy choice.
  static std::shared_ptr<const DenseGroup> create(unsigned p, std::vector<Elem> table,
                                                  std::vector<Elem> gens = {});

  unsigned prime() const { return p_; }
  unsigned order_exponent() const { return exponent_; }
  std::size_t order() const { return order_; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::uint64_t k) const;
  /// [a,b] = a^-1 b^-1 a b.
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// b^-1 a b.
  Elem conj(Elem a, Elem b) const { return mul(mul(inv(b), a), b); }
  std::uint64_t element_order(Elem a) const;

  const std::vector<Elem>& generators() const { return gens_; }
  std::span<const Elem> table() const { return table_; }

 private:
  DenseGroup() = default;

  unsigned p_ = 3;
  unsigned exponent_ = 0;
  std::size_t order_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

using DenseGroupPtr = std::shared_ptr<const DenseGroup>;

/// A subgroup of a dense group: its element set plus an irredundant
/// generating sequence.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(DenseGroupPtr group, ElementSet members, std::vector<Elem> gens)
      : group_(std::move(group)), members_(std::move(members)), gens_(std::move(gens)) {}

  const DenseGroupPtr& group() const { return group_; }
  const DenseGroup& parent() const { return *group_; }
  std::size_t order() const { return members_.count(); }
  unsigned order_exponent() const;
  bool contains(Elem x) const { return members_.test(x); }
  bool is_trivial() const { return order() == 1; }
  const ElementSet& members() const { return members_; }
  std::vector<Elem> elements() const { return members_.to_vector(); }
  const std::vector<Elem>& generators() const { return gens_; }

  bool is_subgroup_of(const Subgroup& other) const;
  bool same_group(const Subgroup& other) const { return group_ == other.group_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  DenseGroupPtr group_;
  ElementSet members_;
  std::vector<Elem> gens_;
};

/// Ascending or descending run of subgroups of one parent; each function
/// documents its direction.
using Chain = std::vector<Subgroup>;

/// Throws Errc::handle_mismatch unless both subgroups share a parent.
void require_same_group(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const DenseGroupPtr& g);
Subgroup whole_group(const DenseGroupPtr& g);
Subgroup generate(const DenseGroupPtr& g, std::span<const Elem> gens);
/// Wraps a set already known to be a subgroup (closure is verified).
Subgroup subgroup_from_members(const DenseGroupPtr& g, const ElementSet& members);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

Subgroup center(const Subgroup& h);
/// C_H(X) = {h in H : hx = xh for all x in X}.
Subgroup centralizer(const Subgroup& h, const Subgroup& x);
/// Smallest subgroup containing X normalized by `within`.
Subgroup normal_closure(const Subgroup& x, const Subgroup& within);
bool is_normal(const Subgroup& x, const Subgroup& within);
/// Subgroup generated by the elements of X of order dividing p.
Subgroup omega1(const Subgroup& x);

/// [A,B] from generator commutators, normally closed in <A,B>.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// [A,B] generated by every element pair; the reference route for tests.
Subgroup commutator_subgroup_all_pairs(const Subgroup& a, const Subgroup& b);
/// [A,B;k] = [[A,B;k-1],B], left-nested.
Subgroup iterated_commutator(const Subgroup& a, const Subgroup& b, unsigned k);

/// K_1 = H, K_{r+1} = [K_r, H], ending with the trivial subgroup.
Chain lower_central_series(const Subgroup& h);
/// Z_0 = 1, Z_{r+1}/Z_r = Z(H/Z_r), ending with H.
Chain upper_central_series(const Subgroup& h);
/// H, H', H'', ... ending with the trivial subgroup.
Chain derived_series(const Subgroup& h);
unsigned nilpotency_class(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_metabelian(const Subgroup& h);
/// Class n-1 for |H| = p^n with n >= 2 (abelian groups of order p^2 count).
bool is_maximal_class(const Subgroup& h);

/// Every normal subgroup of H, sorted by order then members.
std::vector<Subgroup> normal_subgroups(const Subgroup& h);
/// Every non-trivial elementary abelian subgroup of H, sorted by order then members.
std::vector<Subgroup> elementary_abelian_subgroups(const Subgroup& h);
unsigned p_rank(const Subgroup& h);

/// Sort key: order first, then element set.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

}  // namespace pgrp
