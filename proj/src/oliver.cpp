#include "pgrp/oliver.hpp"

#include <algorithm>

#include "pgrp/error.hpp"

namespace pgrp::oliver {

Subgroup thompson_subgroup(const Subgroup& s) {
  const auto eas = elementary_abelian_subgroups(s);
  Subgroup j = trivial_subgroup(s.group());
  if (eas.empty()) return j;
  // Sorted by order, so the maximal-rank members come last.
  const std::size_t top = eas.back().order();
  for (auto it = eas.rbegin(); it != eas.rend() && it->order() == top; ++it) j = join(j, *it);
  return j;
}

Subgroup thompson_subgroup(const Group& s) {
  return thompson_subgroup(whole_group(s.dense()));
}

Subgroup omega_centralizer(const Subgroup& s, const Subgroup& r) {
  return omega1(centralizer(s, r));
}

QSeriesCheck check_q_series(const Subgroup& s, const Chain& chain) {
  if (chain.empty()) fail(Errc::argument, "empty chain");
  for (const auto& q : chain) {
    require_same_group(s, q);
    if (!q.is_subgroup_of(s)) fail(Errc::argument, "chain term is not a subgroup of S");
  }
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i - 1].is_subgroup_of(chain[i]))
      fail(Errc::argument, "chain is not ascending at index " + std::to_string(i));

  QSeriesCheck out;
  out.cert.chain = chain;
  auto failed = [&](std::size_t i, std::string why) {
    out.valid = false;
    out.failed_index = i;
    out.reason = std::move(why);
    return out;
  };
  if (!chain[0].is_trivial()) return failed(0, "Q_0 is not trivial");
  const unsigned p = s.parent().prime();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!is_normal(chain[i], s)) return failed(i, "Q_" + std::to_string(i) + " is not normal in S");
    Subgroup w = omega_centralizer(s, chain[i - 1]);
    Subgroup c = iterated_commutator(w, chain[i], p - 1);
    out.cert.steps.push_back({w, c});
    if (!c.is_trivial())
      return failed(i, "[Omega_1(C_S(Q_" + std::to_string(i - 1) + ")), Q_" + std::to_string(i) +
                           "; p-1] has order " + std::to_string(c.order()));
  }
  out.valid = true;
  return out;
}

QSeriesSearch::QSeriesSearch(Subgroup s) : s_(std::move(s)), normals_(pgrp::normal_subgroups(s_)) {
  for (std::size_t i = 0; i < normals_.size(); ++i) index_.emplace(normals_[i].members(), i);
  admits_.assign(normals_.size(), -1);
  predecessor_.assign(normals_.size(), 0);
  omega_.resize(normals_.size());
}

std::size_t QSeriesSearch::index_of(const Subgroup& q) const {
  require_same_group(s_, q);
  auto it = index_.find(q.members());
  if (it == index_.end()) fail(Errc::argument, "subgroup is not normal in S");
  return it->second;
}

const Subgroup& QSeriesSearch::omega_of(std::size_t i) {
  if (!omega_[i]) omega_[i] = omega_centralizer(s_, normals_[i]);
  return *omega_[i];
}

bool QSeriesSearch::step_ok(std::size_t r, std::size_t q) {
  return iterated_commutator(omega_of(r), normals_[q], s_.parent().prime() - 1).is_trivial();
}

bool QSeriesSearch::admits_index(std::size_t i) {
  if (admits_[i] >= 0) return admits_[i] == 1;
  if (normals_[i].is_trivial()) return (admits_[i] = 1) == 1;
  admits_[i] = 0;
  // Larger R leave a smaller centralizer, so they are tried first.
  for (std::size_t j = i; j-- > 0;) {
    const Subgroup& r = normals_[j];
    if (r.order() >= normals_[i].order() || !r.is_subgroup_of(normals_[i])) continue;
    if (admits_index(j) && step_ok(j, i)) {
      admits_[i] = 1;
      predecessor_[i] = j;
      break;
    }
  }
  return admits_[i] == 1;
}

bool QSeriesSearch::admits(const Subgroup& q) { return admits_index(index_of(q)); }

std::optional<Chain> QSeriesSearch::series_for(const Subgroup& q) {
  std::size_t i = index_of(q);
  if (!admits_index(i)) return std::nullopt;
  Chain chain;
  for (;;) {
    chain.push_back(normals_[i]);
    if (normals_[i].is_trivial()) break;
    i = predecessor_[i];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Subgroup greedy_oliver(const Subgroup& s, Chain* chain) {
  const auto normals = normal_subgroups(s);
  const unsigned p = s.parent().prime();
  Subgroup q = trivial_subgroup(s.group());
  if (chain) *chain = {q};
  for (;;) {
    const Subgroup w = omega_centralizer(s, q);
    std::vector<const Subgroup*> ext;
    for (const auto& n : normals)
      if (n.order() > q.order() && q.is_subgroup_of(n) &&
          iterated_commutator(w, n, p - 1).is_trivial())
        ext.push_back(&n);
    if (ext.empty()) return q;
    Subgroup all = q;
    for (const auto* n : ext) all = join(all, *n);
    q = iterated_commutator(w, all, p - 1).is_trivial() ? all : *ext.back();
    if (chain) chain->push_back(q);
  }
}

OliverResult oliver_subgroup(const Subgroup& s) {
  QSeriesSearch search(s);
  const auto& normals = search.normal_subgroups();
  std::vector<std::size_t> admitting;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (search.admits(normals[i])) admitting.push_back(i);

  std::vector<std::size_t> maxima;
  for (std::size_t a : admitting) {
    bool maximal = true;
    for (std::size_t b : admitting)
      if (normals[b].order() > normals[a].order() && normals[a].is_subgroup_of(normals[b]))
        maximal = false;
    if (maximal) maxima.push_back(a);
  }
  if (maxima.size() != 1)
    fail(Errc::integrity, std::to_string(maxima.size()) +
                              " maximal normal subgroups admit a Q-series; expected exactly one");

  OliverResult out;
  out.x = normals[maxima.front()];
  for (std::size_t a : admitting)
    if (!normals[a].is_subgroup_of(out.x))
      fail(Errc::integrity, "an admitting normal subgroup lies outside X(S)");
  auto check = check_q_series(s, *search.series_for(out.x));
  if (!check.valid) fail(Errc::integrity, "certificate chain fails: " + check.reason);
  out.cert = std::move(check.cert);
  out.greedy = greedy_oliver(s);
  out.greedy_agrees = out.greedy == out.x;
  out.admitting = admitting.size();
  out.normal_count = normals.size();
  return out;
}

ConjectureResult conjecture_check(const Subgroup& s) {
  ConjectureResult out;
  out.j = thompson_subgroup(s);
  out.x = oliver_subgroup(s);
  out.holds = out.j.is_subgroup_of(out.x.x);
  if (!out.holds)
    for (Elem e : out.j.elements())
      if (!out.x.x.contains(e)) {
        out.witness = e;
        break;
      }
  return out;
}

std::string ConditionReport::met() const {
  std::string out;
  auto add = [&](bool b, const char* name) {
    if (!b) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(class_at_most_4, "class<=4");
  add(metabelian, "metabelian");
  add(maximal_class, "maximal_class");
  add(rank_at_most_p.value_or(false), "rank<=p");
  return out.empty() ? "none" : out;
}

ConditionReport classify_conditions(const Group& g) {
  ConditionReport r;
  r.order_exponent = g.order_exponent();
  r.nilpotency_class = nilpotency_class(g);
  r.class_at_most_4 = r.nilpotency_class <= 4;
  r.metabelian = is_metabelian(g);
  r.maximal_class = is_maximal_class(g);
  const RankInfo rank = rank_info(g);
  r.rank = rank.value;
  r.rank_exact = rank.exact;
  if (rank.exact || rank.value > g.prime()) r.rank_at_most_p = rank.value <= g.prime();
  return r;
}

}  // namespace pgrp::oliver
