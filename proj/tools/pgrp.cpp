// pgrp: command-line front end for group and module analyses and the
// verification suites. Output is `key: value` lines on stdout.
//
// Exit codes: 0 ok, 1 property or conjecture failure, 2 capacity,
// 3 usage or parse error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "pgrp/catalog.hpp"
#include "pgrp/error.hpp"
#include "pgrp/group.hpp"
#include "pgrp/modrep.hpp"
#include "pgrp/oliver.hpp"
#include "pgrp/suites.hpp"

namespace fs = std::filesystem;
using namespace pgrp;

namespace {

enum Exit { ok = 0, property_failure = 1, capacity = 2, usage = 3 };

int exit_code(Errc c) {
  switch (c) {
    case Errc::capacity:
    case Errc::unsupported_on_engine:
      return capacity;
    case Errc::parse:
    case Errc::format:
    case Errc::argument:
    case Errc::representation_invalid:
    case Errc::dimension_mismatch:
      return usage;
    default:
      return property_failure;
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string order_of(const Subgroup& h) { return format_order(h.parent().prime(), h.order_exponent()); }

std::string join_elems(const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

// A file path names a group file; anything else is an expression whose
// paths resolve against the catalog directory.
Group resolve_group(const std::string& arg, const fs::path& catalog_dir) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return catalog::load_group(arg);
  return catalog::build(arg, catalog_dir);
}

int cmd_info(const std::string& expr, const fs::path& dir) {
  const Group g = resolve_group(expr, dir);
  std::cout << "expr: " << expr << "\n";
  std::cout << "engine: " << (g.engine() == Engine::dense ? "dense" : "perm") << "\n";
  std::cout << "order: " << format_order(g.prime(), g.order_exponent()) << "\n";
  std::cout << "class: " << nilpotency_class(g) << "\n";
  std::cout << "derived_class: " << derived_subgroup_class(g) << "\n";
  const RankInfo rank = rank_info(g);
  std::cout << (rank.exact ? "rank: " : "rank_lower_bound: ") << rank.value << "\n";
  std::cout << "metabelian: " << yes_no(is_metabelian(g)) << "\n";
  std::cout << "maximal_class: " << yes_no(is_maximal_class(g)) << "\n";
  if (g.has_dense()) std::cout << "center: " << order_of(center(g)) << "\n";
  return ok;
}

int cmd_oliver(const std::string& expr, const fs::path& dir) {
  const Group g = resolve_group(expr, dir);
  const Subgroup s = whole_group(g.dense());
  const auto r = oliver::conjecture_check(s);
  const auto cond = oliver::classify_conditions(g);
  std::cout << "expr: " << expr << "\n";
  std::cout << "order: " << order_of(s) << "\n";
  std::cout << "J: " << order_of(r.j) << "\n";
  std::cout << "X: " << order_of(r.x.x) << "\n";
  std::cout << "normal_subgroups: " << r.x.normal_count << "\n";
  std::cout << "admitting: " << r.x.admitting << "\n";
  std::string chain;
  for (const auto& q : r.x.cert.chain) chain += (chain.empty() ? "" : " < ") + order_of(q);
  std::cout << "q_series: " << chain << "\n";
  std::cout << "greedy_agrees: " << yes_no(r.x.greedy_agrees) << "\n";
  std::cout << "conditions_met: " << cond.met() << "\n";
  std::cout << "conjecture: " << (r.holds ? "holds" : "FAILS") << "\n";
  if (!r.holds) {
    std::cout << "witness_element: " << r.witness.value_or(0) << "\n";
    std::cout << "J_generators: " << join_elems(r.j.generators()) << "\n";
    std::cout << "X_generators: " << join_elems(r.x.x.generators()) << "\n";
    std::cout << "group_file:\n" << catalog::format_group_file(g, catalog::GroupFileKind::table);
    return property_failure;
  }
  return ok;
}

int cmd_fmodule(const std::string& group_arg, const std::string& rep_arg, const fs::path& dir) {
  const Group g = resolve_group(group_arg, dir);
  fs::path rep_path(rep_arg);
  std::error_code ec;
  if (!fs::exists(rep_path, ec) && rep_path.is_relative() && fs::exists(dir / rep_path, ec))
    rep_path = dir / rep_path;
  const modrep::Rep v = catalog::load_rep(rep_path, g.dense());
  const Subgroup s = whole_group(v.group());
  const Subgroup z1 = omega1(center(s));

  std::cout << "group: " << group_arg << "\n";
  std::cout << "order: " << order_of(s) << "\n";
  std::cout << "dim: " << v.dim() << "\n";
  std::cout << "faithful: " << yes_no(v.is_faithful()) << "\n";
  std::cout << "ps: " << yes_no(modrep::ps_condition(v, z1)) << "\n";
  std::cout << "quadratic_in_omega1_center: " << join_elems(modrep::quadratic_elements(v, z1)) << "\n";
  if (!v.is_faithful()) {
    std::cerr << "error: offender analysis needs a faithful module\n";
    return property_failure;
  }
  const auto a = modrep::analyze_offenders(v);
  auto describe = [&](const modrep::Offender& o) {
    std::ostringstream os;
    os << "rank=" << o.group.order_exponent() << " j_exponent=" << o.j.exponent
       << " best=" << yes_no(o.best) << " quadratic=" << yes_no(modrep::is_quadratic(v, o.group))
       << " generators=" << join_elems(o.group.generators());
    return os.str();
  };
  std::cout << "elementary_abelian: " << a.elementary.size() << "\n";
  std::cout << "offenders: " << a.offenders.size() << "\n";
  for (const auto& o : a.offenders) std::cout << "offender: " << describe(o) << "\n";
  std::cout << "best_offenders: " << a.best.size() << "\n";
  for (const auto& o : a.best) {
    std::cout << "best: " << describe(o) << "\n";
    const auto r = modrep::timmesfeld_replace(v, o.group);
    std::cout << "replacement: E rank=" << r.e.order_exponent() << " j_exponent=" << r.j_e.exponent
              << " -> F rank=" << r.f.order_exponent() << " j_exponent=" << r.j_f.exponent
              << " generators=" << join_elems(r.f.generators()) << "\n";
  }
  std::cout << "is_f_module: " << yes_no(a.is_f_module()) << "\n";
  return ok;
}

int cmd_verify(const std::string& suite, const fs::path& dir, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suites::suite_names();
  } else {
    const auto& known = suites::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      std::cerr << "error: unknown suite '" << suite << "'; one of:";
      for (const auto& n : known) std::cerr << " " << n;
      std::cerr << "\n";
      return usage;
    }
    names = {suite};
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) std::cout << "\n";
    const auto r = suites::run_suite(names[i], {dir, seed});
    suites::print(std::cout, r);
    all_ok = all_ok && r.ok();
  }
  return all_ok ? ok : property_failure;
}

int cmd_reproduce(const std::string& name) {
  if (name != "wreath333") {
    std::cerr << "error: unknown reproduction '" << name << "'; available: wreath333\n";
    return usage;
  }
  const Group g = wreath(wreath(cyclic(3, 1), 3), 3);
  const PermGroup perm = g.to_perm();
  const auto witness = g.rank_witness();
  const auto check = check_rank_witness(perm, witness);
  const auto cond = oliver::classify_conditions(g);
  std::cout << "name: wreath333\n";
  std::cout << "expr: WR(WR(C3,3),3)\n";
  std::cout << "engine: " << (g.engine() == Engine::dense ? "dense" : "perm") << "\n";
  std::cout << "degree: " << perm.degree() << "\n";
  std::cout << "order: " << format_order(g.prime(), g.order_exponent()) << "\n";
  std::cout << "order_value: " << perm.order() << "\n";
  std::cout << "class: " << nilpotency_class(g) << "\n";
  std::cout << "derived_class: " << derived_subgroup_class(g) << "\n";
  std::cout << "rank_witness: " << (check.valid ? std::to_string(check.rank) : "invalid") << "\n";
  for (const auto& w : witness) std::cout << "rank_witness_generator: " << w.to_cycles() << "\n";
  std::cout << "class_at_most_4: " << yes_no(cond.class_at_most_4) << "\n";
  std::cout << "metabelian: " << yes_no(cond.metabelian) << "\n";
  std::cout << "maximal_class: " << yes_no(cond.maximal_class) << "\n";
  std::cout << "rank_at_most_p: "
            << (cond.rank_at_most_p ? yes_no(*cond.rank_at_most_p) : "unknown") << "\n";
  std::cout << "conditions_met: " << cond.met() << "\n";
  return check.valid ? ok : property_failure;
}

int cmd_catalog(const fs::path& dir) {
  std::size_t checked = 0, failed = 0;
  auto report = [&](const catalog::Entry& e, const std::vector<catalog::CheckedExpectation>& cs) {
    bool entry_ok = true;
    for (const auto& c : cs) {
      ++checked;
      if (c.ok) continue;
      entry_ok = false;
      ++failed;
      std::cout << "mismatch: " << e.name << " " << c.expected.key << " expected " << c.expected.value
                << " got " << c.actual << "\n";
    }
    std::cout << "entry " << e.name << ": " << (entry_ok ? "ok" : "FAILED") << "\n";
  };
  const auto groups = catalog::load_manifest(dir / "catalog.txt");
  for (const auto& e : groups.entries) report(e, catalog::check_group(e, catalog::build(e.expr, groups.base_dir)));
  const auto mods = catalog::load_manifest(dir / "modules.txt");
  for (const auto& e : mods.entries) report(e, catalog::check_module(e, catalog::build_module(e, mods.base_dir)));
  std::cout << "entries: " << groups.entries.size() + mods.entries.size() << "\n";
  std::cout << "expectations: " << checked << "\n";
  std::cout << "mismatches: " << failed << "\n";
  return failed ? property_failure : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-group and F_p G-module analyses with verification suites"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string catalog_dir = PGRP_CATALOG_DIR;
  app.add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--catalog", catalog_dir, "Catalog directory")->capture_default_str();

  std::string expr, rep, suite, name;
  auto* info = app.add_subcommand("info", "Order, class, rank and related invariants of a group");
  info->add_option("expr", expr, "Group expression or group file")->required();
  auto* oliver = app.add_subcommand("oliver", "J(S), X(S) and the conjecture check");
  oliver->add_option("expr", expr, "Group expression or group file")->required();
  auto* fmodule = app.add_subcommand("fmodule", "Offender analysis of a module");
  fmodule->add_option("group", expr, "Group expression or group file")->required();
  fmodule->add_option("rep", rep, "Representation file")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite, or `all`");
  verify->add_option("suite", suite, "Suite name")->required();
  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a recorded computation");
  reproduce->add_option("name", name, "Computation name (wreath333)")->required();
  auto* cat = app.add_subcommand("catalog", "Check every expectation in the bundled catalog");
  for (auto* sub : {info, oliver, fmodule, verify, reproduce, cat}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*info) return cmd_info(expr, catalog_dir);
    if (*oliver) return cmd_oliver(expr, catalog_dir);
    if (*fmodule) return cmd_fmodule(expr, rep, catalog_dir);
    if (*verify) return cmd_verify(suite, catalog_dir, seed);
    if (*reproduce) return cmd_reproduce(name);
    if (*cat) return cmd_catalog(catalog_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return usage;
}
