// Acceptance run: one line per criterion, exit status 1 if any fails.
//
// The command-line tool is exercised as a subprocess so the reported values
// are the ones a user sees; suite internals are cross-checked against the
// library run of the same suite and against brute-force oracles.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pgrp/catalog.hpp"
#include "pgrp/dense.hpp"
#include "pgrp/error.hpp"
#include "pgrp/suites.hpp"

namespace {

using pgrp::suites::Status;

struct Run {
  int rc = -1;
  std::string out;
  double seconds = 0;
  std::multimap<std::string, std::string> keys;

  std::string get(const std::string& k) const {
    auto it = keys.find(k);
    return it == keys.end() ? std::string("<missing>") : it->second;
  }
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

Run cli(const std::vector<std::string>& args) {
  std::string cmd = quote(PGRP_CLI) + " --catalog " + quote(PGRP_CATALOG_DIR);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  Run r;
  auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    r.keys.emplace(line.substr(0, colon), line.substr(colon + 2));
  }
  return r;
}

struct Verdict {
  bool ok = true;
  std::vector<std::string> why;
  std::vector<std::string> facts;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why.push_back(what);
    }
  }
  void fact(const std::string& f) { facts.push_back(f); }
};

int failures = 0;

void report(int n, const std::string& title, const Verdict& v) {
  std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << " - " << title;
  if (!v.facts.empty()) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.facts.size(); ++i) std::cout << (i ? ", " : "") << v.facts[i];
    std::cout << ")";
  }
  std::cout << "\n";
  for (const auto& w : v.why) std::cout << "    " << w << "\n";
  if (!v.ok) ++failures;
}

std::string property_line(const pgrp::suites::SuiteResult& r, const std::string& prop) {
  auto c = r.counts(prop);
  return "property " + prop + ": pass " + std::to_string(c.pass) + " fail " +
         std::to_string(c.fail) + " vacuous " + std::to_string(c.vacuous);
}

/// Runs a suite in-process and through `pgrp verify`, requiring both to
/// succeed and print the same report.
pgrp::suites::SuiteResult suite(Verdict& v, const std::string& name, std::uint64_t seed = 0) {
  pgrp::suites::SuiteResult lib;
  try {
    lib = pgrp::suites::run_suite(name, {PGRP_CATALOG_DIR, seed});
  } catch (const std::exception& e) {
    v.require(false, name + ": library run threw: " + e.what());
    return lib;
  }
  Run r = cli({"--seed", std::to_string(seed), "verify", name});
  std::ostringstream expected;
  pgrp::suites::print(expected, lib);
  v.require(r.rc == 0, name + ": verify exited " + std::to_string(r.rc));
  v.require(r.get("status") == "ok", name + ": status " + r.get("status"));
  v.require(r.out == expected.str(), name + ": CLI report differs from library run");
  v.require(lib.totals().fail == 0, name + ": " + std::to_string(lib.totals().fail) + " failures");
  for (const auto& p : lib.properties())
    v.require(r.out.find(property_line(lib, p) + "\n") != std::string::npos,
              name + ": missing accounting line for " + p);
  return lib;
}

std::size_t note_value(const pgrp::suites::SuiteResult& r, const std::string& key) {
  const std::string* s = r.note(key);
  return s ? std::stoul(*s) : 0;
}

struct CatalogFacts {
  std::size_t dense = 0;
  std::size_t maximal_class_81_729 = 0;
  bool wreath_is_maximal_class = false;
};

CatalogFacts catalog_facts() {
  CatalogFacts f;
  auto m = pgrp::catalog::load_manifest(std::filesystem::path(PGRP_CATALOG_DIR) / "catalog.txt");
  for (const auto& e : m.entries) {
    auto g = pgrp::catalog::build(e.expr, m.base_dir);
    if (!g.has_dense()) continue;
    ++f.dense;
    const auto& d = *g.dense();
    if (d.prime() == 3 && d.order() >= 81 && d.order() <= 729 &&
        pgrp::is_maximal_class(pgrp::whole_group(g.dense()))) {
      ++f.maximal_class_81_729;
      if (e.text == "WR(C3,3)") f.wreath_is_maximal_class = true;
    }
  }
  return f;
}

void criterion1() {
  Verdict v;
  Run r = cli({"reproduce", "wreath333"});
  v.require(r.rc == 0, "exit " + std::to_string(r.rc));
  v.require(r.get("order") == "3^13", "order " + r.get("order"));
  v.require(r.get("order_value") == "1594323", "order_value " + r.get("order_value"));
  v.require(r.get("class") == "9", "class " + r.get("class"));
  v.require(r.get("derived_class") == "3", "derived_class " + r.get("derived_class"));
  v.require(r.get("rank_witness") == "9", "rank_witness " + r.get("rank_witness"));
  v.require(r.keys.count("rank_witness_generator") == 9, "expected 9 witness generators");
  for (const char* k : {"class_at_most_4", "metabelian", "maximal_class", "rank_at_most_p"})
    v.require(r.get(k) == "false", std::string(k) + " " + r.get(k));
  v.require(r.get("conditions_met") == "none", "conditions_met " + r.get("conditions_met"));
  v.require(r.seconds < 120, "took " + std::to_string(r.seconds) + " s");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << r.seconds << " s";
  v.fact("order " + r.get("order") + " = " + r.get("order_value"));
  v.fact("class " + r.get("class"));
  v.fact("derived class " + r.get("derived_class"));
  v.fact("rank witness " + r.get("rank_witness"));
  v.fact(t.str());
  report(1, "reproduce wreath333", v);
}

void criterion2(const CatalogFacts& cat) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  auto r = suite(v, "oliver-conjecture");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(note_value(r, "dense_groups") == cat.dense,
            "suite covered " + std::to_string(note_value(r, "dense_groups")) + " of " +
                std::to_string(cat.dense) + " dense entries");
  v.require(r.instances("J<=X", Status::pass) == cat.dense, "J<=X not shown on every entry");
  v.require(r.instances("greedy=exhaustive", Status::pass) == cat.dense,
            "greedy and exhaustive disagree somewhere");
  v.require(secs < 600, "took " + std::to_string(secs) + " s");
  v.fact(std::to_string(cat.dense) + " dense entries");
  v.fact("J<=X " + std::to_string(r.counts("J<=X").pass) + "/" + std::to_string(cat.dense));
  v.fact("greedy agrees " + std::to_string(r.counts("greedy=exhaustive").pass) + "/" +
         std::to_string(cat.dense));
  report(2, "verify oliver-conjecture", v);
}

void criterion3() {
  Verdict v;
  std::size_t fewest = SIZE_MAX;
  for (std::uint64_t seed : {0u, 1u}) {
    auto r = suite(v, "eq-identities", seed);
    for (const char* p : {"commutator-is-v(g-1)", "p-fold-commutator"}) {
      auto c = r.counts(p);
      fewest = std::min(fewest, c.pass);
      v.require(c.pass >= 1000 && c.vacuous == 0,
                std::string(p) + " checked on " + std::to_string(c.pass) + " triples");
    }
    v.require(note_value(r, "semidirect_products") >= 5, "fewer than 5 semidirect products");
    if (seed == 0) v.fact(std::to_string(note_value(r, "semidirect_products")) + " products");
  }
  v.fact(">= " + std::to_string(fewest) + " triples per identity and seed");
  report(3, "verify eq-identities", v);
}

void criterion4() {
  Verdict v;
  auto r = suite(v, "js-inequality");
  auto ineq = r.counts("j(HK)j(H^K)>=j(H)j(K)");
  auto eq = r.counts("equality-iff-fixed-sum");
  v.require(ineq.pass >= 500, "only " + std::to_string(ineq.pass) + " instances");
  v.require(eq.pass == ineq.pass && eq.vacuous == 0,
            "equality case not checked on every instance");
  v.fact(std::to_string(ineq.pass) + " instances");
  v.fact("equality biconditional on " + std::to_string(eq.pass));
  report(4, "verify js-inequality", v);
}

void criterion5() {
  Verdict v;
  auto r = suite(v, "timmesfeld");
  std::size_t n = note_value(r, "best_offenders_checked");
  for (const char* p : {"F=C_E([V,E])", "F<=E", "[V,F,F]=0", "j_F=j_E", "C_V(F)=[V,E]+C_V(E)"})
    v.require(r.counts(p).pass == n, std::string(p) + " not checked on every best offender");
  v.require(n >= 20, "only " + std::to_string(n) + " non-vacuous instances");
  v.fact(std::to_string(n) + " best offenders");
  v.fact(std::to_string(r.counts("rejects-non-best").pass) + " non-best inputs rejected");
  report(5, "verify timmesfeld", v);
}

void criterion6() {
  Verdict v;
  auto r = suite(v, "normal-abelian");
  std::size_t total = note_value(r, "instances");
  std::size_t nonvac = note_value(r, "nonvacuous_instances");
  v.require(total >= 50, "only " + std::to_string(total) + " instances");
  v.require(nonvac >= 10, "only " + std::to_string(nonvac) + " non-vacuous instances");
  v.require(r.counts("no-offender-in-abelian-normal").pass == nonvac,
            "abelian-normal search not run on every non-vacuous instance");
  auto g = r.counts("[G',E]!=1");
  v.require(g.pass + g.vacuous == nonvac, "[G',E] check not accounted on every instance");
  v.fact(std::to_string(total) + " instances");
  v.fact(std::to_string(nonvac) + " non-vacuous");
  v.fact("offenders meeting the hypotheses: " + std::to_string(g.pass));
  report(6, "verify normal-abelian", v);
}

void criterion7(const CatalogFacts& cat) {
  Verdict v;
  auto r = suite(v, "central-series");
  v.require(r.instances("K_{n+1-r}<=Z_r", Status::pass) == cat.dense,
            "lower/upper central comparison missing for some dense group");
  v.require(r.instances("[K_r,K_s]<=K_{r+s}", Status::pass) == cat.dense,
            "commutator of lower central terms missing for some dense group");
  auto k = r.counts("[K_r,E]=1");
  v.require(k.pass >= 1, "no non-vacuous (G,V,E,r) instance");
  v.fact("both series identities on " + std::to_string(cat.dense) + " groups");
  v.fact("[K_r,E]=1 pass " + std::to_string(k.pass) + " vacuous " + std::to_string(k.vacuous));
  report(7, "verify central-series", v);
}

void criterion8(const CatalogFacts& cat) {
  Verdict v;
  auto m = suite(v, "metabelian");
  v.require(m.counts("G'={[a,x]}").pass >= 1, "no applicable instance");
  auto r = suite(v, "maximal-class-rank");
  std::size_t n = note_value(r, "maximal_class_groups");
  v.require(n == cat.maximal_class_81_729,
            "suite saw " + std::to_string(n) + " of " + std::to_string(cat.maximal_class_81_729) +
                " maximal-class groups");
  v.require(r.counts("rank<=p").pass == n && r.counts("rank=p-iff-wreath").pass == n,
            "rank bound not checked on every group");
  v.require(cat.wreath_is_maximal_class, "WR(C3,3) missing from the catalog");
  Run w = cli({"info", "WR(C3,3)"});
  v.require(w.get("rank") == "3" && w.get("maximal_class") == "true",
            "WR(C3,3) reports rank " + w.get("rank"));
  v.fact(std::to_string(m.counts("G'={[a,x]}").pass) + " set equalities");
  v.fact(std::to_string(n) + " maximal-class groups");
  v.fact("WR(C3,3) rank " + w.get("rank"));
  report(8, "verify metabelian and maximal-class-rank", v);
}

void criterion9() {
  Verdict v;
  auto r = suite(v, "rank-p");
  auto lo = r.counts("offender-rank>=p-1");
  auto eq5 = r.counts("rank-(p-1)-offender");
  auto t12 = r.counts("class<=4-or-metabelian=>not-F");
  auto t13 = r.counts("maximal-class-or-rank<=p=>not-F");
  auto comm = r.counts("common-centralizer-commute");
  v.require(t12.pass >= 1 && t13.pass >= 1, "no instance met the not-F hypotheses");
  v.require(comm.pass >= 1, "no sampled commuting pair");
  v.fact(std::to_string(note_value(r, "ps_instances")) + " PS instances");
  v.fact("offenders under PS: " + std::to_string(lo.pass) + " checked, " +
         std::to_string(eq5.pass) + " of rank p-1, " + std::to_string(lo.vacuous) +
         " instances with none");
  v.fact(std::to_string(comm.pass) + " pairs");
  v.fact("not-F " + std::to_string(t12.pass) + "+" + std::to_string(t13.pass));
  report(9, "verify rank-p", v);
}

/// Offender counts and the best j-exponent of a rank-2 best offender, by
/// brute force over all subgroups generated by two elements.
struct BruteForce {
  std::size_t offenders = 0, best = 0;
  bool rank2_j1_best = false;
};

BruteForce brute_force_ut3() {
  auto m = pgrp::catalog::load_manifest(std::filesystem::path(PGRP_CATALOG_DIR) / "modules.txt");
  const auto* e = m.find("ut3_natural");
  if (!e) throw std::runtime_error("ut3_natural missing from modules.txt");
  auto rep = pgrp::catalog::build_module(*e, m.base_dir);
  const auto& g = *rep.group();
  const int d = static_cast<int>(rep.dim());
  std::vector<std::pair<std::vector<pgrp::Elem>, int>> ea;
  for (const auto& h : oracle::small_generated_subgroups(g, 2)) {
    if (!oracle::is_elementary_abelian(g, h)) continue;
    int j = oracle::log_p(h.size(), g.prime()) + oracle::fixed_dim(rep, h) - d;
    ea.emplace_back(h, j);
  }
  BruteForce out;
  for (const auto& [h, j] : ea) {
    if (h.size() == 1 || j < 0) continue;
    ++out.offenders;
    bool best = true;
    for (const auto& [f, jf] : ea)
      if (std::includes(h.begin(), h.end(), f.begin(), f.end()) && jf > j) best = false;
    if (!best) continue;
    ++out.best;
    if (h.size() == 9 && j == 1) out.rank2_j1_best = true;
  }
  return out;
}

void criterion10() {
  Verdict v;
  Run r = cli({"fmodule", "ES(3,27,3)", "reps/es27_natural.rep"});
  v.require(r.rc == 0, "exit " + std::to_string(r.rc));
  v.require(r.get("is_f_module") == "true", "is_f_module " + r.get("is_f_module"));
  bool found = false;
  auto [lo, hi] = r.keys.equal_range("best");
  for (auto it = lo; it != hi; ++it)
    found = found || it->second.rfind("rank=2 j_exponent=1 ", 0) == 0;
  v.require(found, "no rank-2 best offender with j-exponent 1 reported");
  BruteForce bf = brute_force_ut3();
  v.require(bf.rank2_j1_best, "oracle found no rank-2 best offender with j-exponent 1");
  v.require(r.get("offenders") == std::to_string(bf.offenders),
            "offenders " + r.get("offenders") + ", oracle " + std::to_string(bf.offenders));
  v.require(r.get("best_offenders") == std::to_string(bf.best),
            "best_offenders " + r.get("best_offenders") + ", oracle " + std::to_string(bf.best));
  v.fact("is_f_module " + r.get("is_f_module"));
  v.fact("offenders " + r.get("offenders") + "/" + std::to_string(bf.offenders) + " oracle");
  v.fact("best " + r.get("best_offenders") + "/" + std::to_string(bf.best) + " oracle");
  report(10, "fmodule on UT(3,3) natural module", v);
}

}  // namespace

int main() {
  try {
    CatalogFacts cat = catalog_facts();
    criterion1();
    criterion2(cat);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(cat);
    criterion8(cat);
    criterion9();
    criterion10();
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all criteria passed\n");
  return failures ? 1 : 0;
}
