#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pgrp/catalog.hpp"
#include "pgrp/oliver.hpp"

namespace pgrp::catalog {

namespace {

constexpr std::array group_keys{"order",  "class",   "rank", "derived_class", "metabelian",
                                "maximal_class", "center", "normals", "engine", "j",
                                "x",      "conjecture"};
constexpr std::array module_keys{"dim", "faithful", "f_module", "offenders", "best", "ps",
                                 "quadratic_center"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string order_of(const Subgroup& h) {
  return format_order(h.parent().prime(), h.order_exponent());
}

}  // namespace

bool is_group_key(std::string_view key) {
  return std::find(group_keys.begin(), group_keys.end(), key) != group_keys.end();
}

bool is_module_key(std::string_view key) {
  return std::find(module_keys.begin(), module_keys.end(), key) != module_keys.end();
}

const Entry* Manifest::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir,
                        std::string_view source) {
  Manifest m;
  m.base_dir = base_dir;
  auto error = [&](std::size_t line, const std::string& msg) {
    fail(Errc::format, std::string(source) + ":" + std::to_string(line) + ": " + msg);
  };
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const bool indented = raw.front() == ' ' || raw.front() == '\t';
    if (indented) {
      if (line.substr(0, 6) != "expect" || (line.size() > 6 && line[6] != ' ' && line[6] != '\t'))
        error(line_no, "continuation lines must start with 'expect'");
      if (m.entries.empty()) error(line_no, "'expect' before any entry");
      Entry& e = m.entries.back();
      std::istringstream ss{std::string(line.substr(6))};
      std::string pair;
      bool any = false;
      while (ss >> pair) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
          error(line_no, "expected key=value, found '" + pair + "'");
        std::string key = pair.substr(0, eq);
        const bool known = e.rep_path ? is_module_key(key) : is_group_key(key);
        if (!known) error(line_no, "unknown expectation key '" + key + "'");
        e.expect.push_back({key, pair.substr(eq + 1), line_no});
        any = true;
      }
      if (!any) error(line_no, "'expect' without key=value pairs");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) error(line_no, "expected 'name = expr'");
    Entry e;
    e.line = line_no;
    e.name = std::string(trim(line.substr(0, eq)));
    if (!valid_name(e.name)) error(line_no, "invalid entry name '" + e.name + "'");
    if (m.find(e.name)) error(line_no, "duplicate entry name '" + e.name + "'");
    std::string_view rhs = trim(line.substr(eq + 1));
    const auto at = rhs.rfind('@');
    if (at != std::string_view::npos) {
      std::string_view path = trim(rhs.substr(at + 1));
      if (path.empty()) error(line_no, "module entry without a rep path");
      e.rep_path = std::string(path);
      rhs = trim(rhs.substr(0, at));
    }
    e.text = std::string(rhs);
    try {
      e.expr = parse_expr(e.text);
    } catch (const ParseError& pe) {
      error(line_no, std::string("in '") + e.text + "': " + pe.what());
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::format, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), path.parent_path(), path.string());
}

std::vector<CheckedExpectation> check_group(const Entry& e, const Group& g) {
  std::vector<CheckedExpectation> out;
  std::optional<oliver::ConjectureResult> conj;
  auto conjecture = [&]() -> const oliver::ConjectureResult& {
    if (!conj) conj = oliver::conjecture_check(whole_group(g.dense()));
    return *conj;
  };
  for (const auto& x : e.expect) {
    std::string actual;
    if (x.key == "order") {
      actual = format_order(g.prime(), g.order_exponent());
    } else if (x.key == "class") {
      actual = std::to_string(nilpotency_class(g));
    } else if (x.key == "rank") {
      actual = std::to_string(rank_info(g).value);
    } else if (x.key == "derived_class") {
      actual = std::to_string(derived_subgroup_class(g));
    } else if (x.key == "metabelian") {
      actual = yes_no(is_metabelian(g));
    } else if (x.key == "maximal_class") {
      actual = yes_no(is_maximal_class(g));
    } else if (x.key == "center") {
      actual = order_of(center(g));
    } else if (x.key == "normals") {
      actual = std::to_string(normal_subgroups(g).size());
    } else if (x.key == "engine") {
      actual = g.engine() == Engine::dense ? "dense" : "perm";
    } else if (x.key == "j") {
      actual = order_of(conjecture().j);
    } else if (x.key == "x") {
      actual = order_of(conjecture().x.x);
    } else if (x.key == "conjecture") {
      actual = conjecture().holds ? "holds" : "fails";
    }
    out.push_back({x, actual, actual == x.value});
  }
  return out;
}

std::vector<CheckedExpectation> check_module(const Entry& e, const modrep::Rep& v) {
  std::vector<CheckedExpectation> out;
  std::optional<modrep::OffenderAnalysis> analysis;
  auto offenders = [&]() -> const modrep::OffenderAnalysis& {
    if (!analysis) analysis = modrep::analyze_offenders(v);
    return *analysis;
  };
  const auto z = [&] { return omega1(center(whole_group(v.group()))); };
  for (const auto& x : e.expect) {
    std::string actual;
    if (x.key == "dim") {
      actual = std::to_string(v.dim());
    } else if (x.key == "faithful") {
      actual = yes_no(v.is_faithful());
    } else if (x.key == "f_module") {
      actual = yes_no(offenders().is_f_module());
    } else if (x.key == "offenders") {
      actual = std::to_string(offenders().offenders.size());
    } else if (x.key == "best") {
      actual = std::to_string(offenders().best.size());
    } else if (x.key == "ps") {
      actual = yes_no(modrep::ps_condition(v, z()));
    } else if (x.key == "quadratic_center") {
      actual = yes_no(modrep::has_quadratic_in(v, z()));
    }
    out.push_back({x, actual, actual == x.value});
  }
  return out;
}

modrep::Rep build_module(const Entry& e, const std::filesystem::path& base_dir) {
  if (!e.rep_path) fail(Errc::argument, "entry '" + e.name + "' is not a module entry");
  const Group g = build(e.expr, base_dir);
  std::filesystem::path path(*e.rep_path);
  return load_rep(path.is_absolute() ? path : base_dir / path, g.dense());
}

}  // namespace pgrp::catalog
