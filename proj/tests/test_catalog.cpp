#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "pgrp/catalog.hpp"
#include "pgrp/modules.hpp"
#include "pgrp/oliver.hpp"

using namespace pgrp;
using namespace pgrp::catalog;

namespace {

const std::filesystem::path catalog_dir = PGRP_CATALOG_DIR;
const std::filesystem::path data_dir = PGRP_TEST_DATA_DIR;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::integrity;
}

ParseError parse_error(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return ParseError(Diag::syntax, 0, "");
}

Expr random_expr(std::mt19937_64& rng, unsigned p, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  Expr e;
  const int kind = depth == 0 ? pick(3) : pick(6);
  switch (kind) {
    case 0:
      e.ctor = Ctor::cyclic;
      e.nums = {p, 1u + static_cast<unsigned>(pick(4))};
      break;
    case 1:
      e.ctor = Ctor::elementary_abelian;
      e.nums = {p, 1u + static_cast<unsigned>(pick(5))};
      break;
    case 2:
      e.ctor = Ctor::extraspecial;
      e.nums = {p, pick(2) ? std::uint64_t{p} * p * p : std::uint64_t{p} * p * p * p * p,
                pick(2) ? std::uint64_t{p} : std::uint64_t{p} * p};
      break;
    case 3:
      e.ctor = Ctor::direct_product;
      e.args = {random_expr(rng, p, depth - 1), random_expr(rng, p, depth - 1)};
      break;
    case 4:
      e.ctor = Ctor::wreath;
      e.args = {random_expr(rng, p, depth - 1)};
      e.nums = {p};
      break;
    default:
      e.ctor = Ctor::semidirect;
      e.args = {random_expr(rng, p, depth - 1)};
      e.path = pick(2) ? "reps/x.rep" : "dir with space/\"q\".rep";
      break;
  }
  return e;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Expr, ParsesAtomsAndNesting) {
  Expr c3 = parse_expr("C3");
  EXPECT_EQ(c3.ctor, Ctor::cyclic);
  EXPECT_EQ(c3.nums, (std::vector<std::uint64_t>{3, 1}));

  Expr w = parse_expr("WR(WR(C3,3),3)");
  ASSERT_EQ(w.ctor, Ctor::wreath);
  ASSERT_EQ(w.args.size(), 1u);
  EXPECT_EQ(w.args[0].ctor, Ctor::wreath);
  EXPECT_EQ(w.args[0].args[0], c3);
  EXPECT_EQ(w.prime(), 3u);

  EXPECT_EQ(parse_expr(" DP ( C9 ,\tEA( 3 , 2 ) ) "), parse_expr("DP(C9,EA(3,2))"));
  EXPECT_EQ(parse_expr("FROM(\"a b/c.grp\")").path, "a b/c.grp");
}

TEST(Expr, UnclosedArgumentListReportsEndOfInput) {
  ParseError e = parse_error("DP(C3,");
  EXPECT_EQ(e.offset(), 7u);
  EXPECT_EQ(e.kind(), Diag::syntax);
  EXPECT_EQ(e.code(), Errc::parse);
}

TEST(Expr, DistinctDiagnostics) {
  struct Case {
    const char* text;
    Diag kind;
    std::size_t offset;
  };
  const Case cases[] = {
      {"FOO(3)", Diag::unknown_constructor, 1},
      {"X9", Diag::unknown_constructor, 1},
      {"ea(3,2)", Diag::unknown_constructor, 1},
      {"EA(3)", Diag::arity, 1},
      {"DP(C3,C3,C3)", Diag::arity, 1},
      {"WR(C3)", Diag::arity, 1},
      {"EA(4,2)", Diag::non_prime, 4},
      {"EA(2,2)", Diag::non_prime, 4},
      {"C6", Diag::non_prime, 1},
      {"DP(C3,C5)", Diag::mixed_primes, 7},
      {"WR(C3,5)", Diag::mixed_primes, 7},
      {"DP(C3,DP(C3,C25))", Diag::mixed_primes, 13},
      {"EA(3,0)", Diag::range, 6},
      {"ES(3,81,3)", Diag::range, 6},
      {"ES(3,27,27)", Diag::range, 9},
      {"C3)", Diag::syntax, 3},
      {"", Diag::syntax, 1},
  };
  for (const auto& c : cases) {
    ParseError e = parse_error(c.text);
    EXPECT_EQ(e.kind(), c.kind) << c.text << ": " << e.what();
    EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
  }
  EXPECT_NE(to_string(Diag::arity), to_string(Diag::range));
}

TEST(Expr, PrintParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const unsigned p = i % 2 ? 3 : 5;
    Expr e = random_expr(rng, p, 3);
    const std::string text = print_expr(e);
    Expr back = parse_expr(text);
    EXPECT_EQ(back, e) << text;
    EXPECT_EQ(print_expr(back), text);
  }
  for (const char* s : {"C3", "C81", "ES(3,243,9)", "WR(WR(C3,3),3)", "SDP(C9,reps/c9_jordan4.rep)"})
    EXPECT_EQ(print_expr(parse_expr(s)), s);
}

TEST(Expr, BuildsGroups) {
  EXPECT_EQ(build("DP(C9,C3)", catalog_dir).order_exponent(), 3u);
  EXPECT_EQ(build("WR(C3,3)", catalog_dir).order_exponent(), 4u);
  Group sdp = build("SDP(C3,reps/c3_jordan3.rep)", catalog_dir);
  EXPECT_EQ(sdp.order_exponent(), 4u);
  EXPECT_EQ(nilpotency_class(sdp), 3u);
  EXPECT_EQ(code_of([] { build("FROM(no/such.grp)", catalog_dir); }), Errc::format);
}

TEST(GroupFile, PermFileForC3) {
  Group g = load_group(data_dir / "c3_perm.grp");
  EXPECT_EQ(g.order_exponent(), 1u);
  EXPECT_EQ(g.prime(), 3u);
}

TEST(GroupFile, LoadIsDeterministic) {
  for (const char* f : {"groups/maxclass_81_split.grp", "groups/maxclass_729_nonsplit.grp"}) {
    const std::string bytes = slurp(catalog_dir / f);
    Group a = parse_group_file(bytes), b = parse_group_file(bytes);
    ASSERT_TRUE(a.has_dense());
    EXPECT_EQ(format_group_file(a, GroupFileKind::table), format_group_file(b, GroupFileKind::table));
    EXPECT_EQ(format_group_file(a, GroupFileKind::perm), format_group_file(b, GroupFileKind::perm));
  }
}

TEST(GroupFile, TableRoundTrip) {
  Group g = extraspecial(3, 27, 9);
  const std::string text = format_group_file(g, GroupFileKind::table);
  Group back = parse_group_file(text);
  EXPECT_EQ(format_group_file(back, GroupFileKind::table), text);
  EXPECT_EQ(nilpotency_class(back), 2u);

  Group w = wreath(cyclic(3, 1), 3);
  Group wp = parse_group_file(format_group_file(w, GroupFileKind::perm));
  EXPECT_EQ(wp.order_exponent(), 4u);
  EXPECT_EQ(nilpotency_class(wp), 3u);
}

TEST(GroupFile, MalformedLinesNameTheLine) {
  auto message = [](std::string_view text) {
    try {
      parse_group_file(text, "g");
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::format);
      return std::string(e.what());
    }
    ADD_FAILURE() << "parsed";
    return std::string();
  };
  EXPECT_NE(message("pgrp v2\n").find("g:1:"), std::string::npos);
  EXPECT_NE(message("pgrp v1\np 4\n").find("g:2:"), std::string::npos);
  EXPECT_NE(message("pgrp v1\np 3\nkind list\n").find("g:3:"), std::string::npos);
  EXPECT_NE(message("pgrp v1\np 3\nkind table\norder 3\n0 1 2\n1 2\n").find("g:6:"), std::string::npos);
  EXPECT_NE(message("pgrp v1\np 3\nkind perm\ndegree 3\n(1,2,4)\n").find("g:5:"), std::string::npos);
  // A non-associative table is structurally well formed but not a group.
  EXPECT_THROW(parse_group_file("pgrp v1\np 3\nkind table\norder 3\n0 1 2\n1 1 0\n2 0 1\n"), Error);
}

TEST(RepFile, TransvectionIsFaithful) {
  Group c3 = cyclic(3, 1);
  modrep::Rep v = load_rep(data_dir / "c3_transvection.rep", c3.dense());
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_TRUE(v.is_faithful());
  EXPECT_EQ(format_rep_file(v), slurp(data_dir / "c3_transvection.rep"));
}

TEST(RepFile, CorruptedFixtureIsRejected) {
  Group c3 = cyclic(3, 1);
  EXPECT_EQ(code_of([&] { load_rep(data_dir / "c3_corrupt.rep", c3.dense()); }),
            Errc::representation_invalid);
  Group c9 = cyclic(3, 2);
  EXPECT_EQ(code_of([&] {
              parse_rep_file("fprep v1\np 5\ndim 1\ngen 0\n1\n", c9.dense());
            }),
            Errc::representation_invalid);
  Group ea = elementary_abelian(3, 2);
  EXPECT_EQ(code_of([&] { parse_rep_file("fprep v1\np 3\ndim 1\ngen 0\n1\n", ea.dense()); }),
            Errc::representation_invalid);
  EXPECT_EQ(code_of([&] { parse_rep_file("fprep v1\np 3\ndim 2\ngen 0\n1 3\n0 1\n", c9.dense()); }),
            Errc::format);
  EXPECT_EQ(code_of([&] { parse_rep_file("fprep v1\np 3\ndim 1\ngen 1\n1\n", c9.dense()); }),
            Errc::format);
}

TEST(RepFile, BundledModulesRoundTrip) {
  Group es = extraspecial(3, 27, 3);
  const std::string bytes = slurp(catalog_dir / "reps/es27_natural.rep");
  modrep::Rep v = parse_rep_file(bytes, es.dense());
  EXPECT_EQ(format_rep_file(v), bytes);
  EXPECT_TRUE(v.is_faithful());
}

TEST(Manifest, ParsesEntriesAndExpectations) {
  Manifest m = parse_manifest(
      "# comment\n"
      "a = C3\n"
      "  expect order=3^1 class=1\n"
      "\n"
      "  expect rank=1\n"
      "b = C3 @ reps/c3_jordan2.rep\n"
      "\texpect dim=2\n",
      catalog_dir);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].expect.size(), 3u);
  EXPECT_EQ(m.entries[0].expect[2].line, 5u);
  ASSERT_TRUE(m.entries[1].rep_path);
  EXPECT_EQ(*m.entries[1].rep_path, "reps/c3_jordan2.rep");
  EXPECT_EQ(m.find("b")->expect[0].key, "dim");
  EXPECT_EQ(m.find("c"), nullptr);
}

TEST(Manifest, RejectsBadInput) {
  for (const char* text : {"a = C3\na = C9\n", "a = C3\n  expect colour=red\n", "  expect order=3\n",
                           "a = DP(C3,\n", "a C3\n", "a = C3\n  expect order\n",
                           "a = C3 @ x.rep\n  expect order=3^1\n"}) {
    EXPECT_EQ(code_of([&] { parse_manifest(text, catalog_dir); }), Errc::format) << text;
  }
}

TEST(Manifest, ReportsMismatches) {
  Manifest m = parse_manifest("a = EA(3,2)\n  expect order=3^2 rank=3\n", catalog_dir);
  auto checks = check_group(m.entries[0], build(m.entries[0].expr, m.base_dir));
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_TRUE(checks[0].ok);
  EXPECT_FALSE(checks[1].ok);
  EXPECT_EQ(checks[1].actual, "2");
}

TEST(Manifest, BundledCatalogMeetsExpectations) {
  Manifest m = load_manifest(catalog_dir / "catalog.txt");
  std::size_t checked = 0, dense = 0;
  for (const auto& e : m.entries) {
    Group g = build(e.expr, m.base_dir);
    dense += g.has_dense();
    for (const auto& c : check_group(e, g)) {
      EXPECT_TRUE(c.ok) << e.name << ": " << c.expected.key << " expected " << c.expected.value
                        << ", got " << c.actual;
      ++checked;
    }
  }
  EXPECT_GE(dense, 30u);
  EXPECT_GE(checked, 300u);
}

TEST(Manifest, BundledModulesMeetExpectations) {
  Manifest m = load_manifest(catalog_dir / "modules.txt");
  ASSERT_NE(m.find("ut3_natural"), nullptr);
  for (const auto& e : m.entries) {
    modrep::Rep v = build_module(e, m.base_dir);
    for (const auto& c : check_module(e, v))
      EXPECT_TRUE(c.ok) << e.name << ": " << c.expected.key << " expected " << c.expected.value
                        << ", got " << c.actual;
  }
}

// For abelian S every normal subgroup admits the series (1, Q), so X(S) = S,
// while J(S) is generated by the rank-maximal elementary abelian subgroup
// Omega_1(S).
TEST(Manifest, AbelianEntriesSatisfyConjectureWithXEqualS) {
  Manifest m = load_manifest(catalog_dir / "catalog.txt");
  std::size_t abelian = 0;
  for (const auto& e : m.entries) {
    Group g = build(e.expr, m.base_dir);
    if (!g.has_dense()) continue;
    Subgroup s = whole_group(g.dense());
    if (!is_abelian(s)) continue;
    ++abelian;
    auto r = oliver::conjecture_check(s);
    EXPECT_TRUE(r.holds) << e.name;
    EXPECT_EQ(r.x.x, s) << e.name;
    EXPECT_EQ(r.j, omega1(s)) << e.name;
  }
  EXPECT_EQ(abelian, 11u);
}
