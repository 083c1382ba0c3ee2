#pragma once

// Thompson subgroup, Q-series and the Oliver subgroup X(S).

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgrp/dense.hpp"
#include "pgrp/group.hpp"

namespace pgrp::oliver {

/// J(S): generated by the elementary abelian subgroups of maximal rank.
Subgroup thompson_subgroup(const Subgroup& s);
Subgroup thompson_subgroup(const Group& s);

/// One step i >= 1 of a Q-series: W = Omega_1(C_S(Q_{i-1})) and the
/// commutator [W, Q_i; p-1], trivial on a valid step.
struct QSeriesStep {
  Subgroup omega;
  Subgroup commutator;
};

struct QSeriesCert {
  Chain chain;  // Q_0 = 1 <= Q_1 <= ... <= Q_n
  std::vector<QSeriesStep> steps;
};

struct QSeriesCheck {
  bool valid = false;
  std::size_t failed_index = 0;  // meaningful when !valid
  std::string reason;
  QSeriesCert cert;  // steps up to and including the failing one
};

/// Checks a chain of subgroups of S as a Q-series. A chain that is not
/// ascending raises Errc::argument; other defects are reported by index.
QSeriesCheck check_q_series(const Subgroup& s, const Chain& chain);

/// Omega_1(C_S(R)).
Subgroup omega_centralizer(const Subgroup& s, const Subgroup& r);

/// Memoized search over the normal subgroups of S. Q admits a Q-series iff
/// Q = 1 or some normal R < Q admits one with [Omega_1(C_S(R)), Q; p-1] = 1.
class QSeriesSearch {
 public:
  explicit QSeriesSearch(Subgroup s);

  const Subgroup& group() const { return s_; }
  const std::vector<Subgroup>& normal_subgroups() const { return normals_; }

  /// Throws Errc::argument for a non-normal Q.
  bool admits(const Subgroup& q);
  /// Ascending chain from 1 to Q, when Q admits one.
  std::optional<Chain> series_for(const Subgroup& q);

 private:
  std::size_t index_of(const Subgroup& q) const;
  bool admits_index(std::size_t i);
  const Subgroup& omega_of(std::size_t i);
  bool step_ok(std::size_t r, std::size_t q);

  Subgroup s_;
  std::vector<Subgroup> normals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<int> admits_;                  // -1 unknown, 0 no, 1 yes
  std::vector<std::size_t> predecessor_;     // witness R for admitting Q
  std::vector<std::optional<Subgroup>> omega_;
};

struct OliverResult {
  Subgroup x;
  QSeriesCert cert;
  Subgroup greedy;
  bool greedy_agrees = false;
  std::size_t admitting = 0;       // normal subgroups admitting a Q-series
  std::size_t normal_count = 0;
};

/// Greedy ascent: extend Q by the join of all normal N >= Q satisfying the
/// step condition (or the largest such N when the join fails) until stuck.
Subgroup greedy_oliver(const Subgroup& s, Chain* chain = nullptr);

/// Exhaustive X(S) with a certificate, cross-checked against greedy_oliver.
/// No unique maximal admitting subgroup is an Errc::integrity error.
OliverResult oliver_subgroup(const Subgroup& s);

struct ConjectureResult {
  Subgroup j;
  OliverResult x;
  bool holds = false;
  std::optional<Elem> witness;  // element of J(S) outside X(S)
};

ConjectureResult conjecture_check(const Subgroup& s);

struct ConditionReport {
  unsigned order_exponent = 0;
  unsigned nilpotency_class = 0;
  unsigned rank = 0;
  bool rank_exact = true;  // false: rank is a verified lower bound
  bool class_at_most_4 = false;
  bool metabelian = false;
  bool maximal_class = false;
  /// Unknown when only a lower bound not exceeding p is available.
  std::optional<bool> rank_at_most_p;

  bool any() const {
    return class_at_most_4 || metabelian || maximal_class || rank_at_most_p.value_or(false);
  }
  /// Names of the conditions that hold, "none" when none do.
  std::string met() const;
};

ConditionReport classify_conditions(const Group& g);

}  // namespace pgrp::oliver
