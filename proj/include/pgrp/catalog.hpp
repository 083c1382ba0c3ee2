#pragma once

// Group expressions, the text file formats for groups and modules, and the
// catalog manifest.
//
//   expr := NAME '(' args ')' | ATOM
//   C<n>            cyclic of prime-power order n, e.g. C3, C9, C27
//   EA(p, r)        elementary abelian of rank r
//   ES(p, order, e) extraspecial of exponent e (p or p^2)
//   DP(a, b)        direct product
//   WR(a, p)        wreath product a wr C_p
//   SDP(g, path)    g semidirect the module read from `path`
//   FROM(path)      group read from a group file
//
// Paths are bare ([A-Za-z0-9_./-]+) or double-quoted, and resolve against
// the catalog directory.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgrp/error.hpp"
#include "pgrp/group.hpp"
#include "pgrp/modrep.hpp"

namespace pgrp::catalog {

enum class Ctor { cyclic, elementary_abelian, extraspecial, direct_product, wreath, semidirect, from_file };

struct Expr {
  Ctor ctor = Ctor::cyclic;
  std::vector<std::uint64_t> nums;  // C: p,k  EA: p,r  ES: p,order,exp  WR: p
  std::vector<Expr> args;           // DP: a,b  WR: a  SDP: g
  std::string path;                 // SDP, FROM
  std::size_t offset = 1;           // 1-based byte offset in the source text

  /// The prime, or 0 when it is only known after reading a file.
  unsigned prime() const;

  /// Structural equality; offsets are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.ctor == b.ctor && a.nums == b.nums && a.args == b.args && a.path == b.path;
  }
};

enum class Diag { syntax, unknown_constructor, arity, non_prime, mixed_primes, range };

std::string_view to_string(Diag d);

/// Errc::parse with the diagnostic kind and the 1-based byte offset.
class ParseError : public Error {
 public:
  ParseError(Diag kind, std::size_t offset, const std::string& message);
  Diag kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Diag kind_;
  std::size_t offset_;
};

Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Builds the group; relative paths resolve against `base_dir`.
Group build(const Expr& e, const std::filesystem::path& base_dir);
Group build(std::string_view text, const std::filesystem::path& base_dir);

enum class GroupFileKind { table, perm };

/// Errors name the line: "source:line: message" with Errc::format.
Group parse_group_file(std::string_view text, std::string_view source = "<group>");
Group load_group(const std::filesystem::path& path);
/// A table file needs a dense group; a perm file uses to_perm().
std::string format_group_file(const Group& g, GroupFileKind kind);

/// Matrices are given for the group's canonical generators, `gen <i>` being
/// the i-th (0-based) entry of DenseGroup::generators().
modrep::Rep parse_rep_file(std::string_view text, const DenseGroupPtr& group,
                           std::string_view source = "<rep>");
modrep::Rep load_rep(const std::filesystem::path& path, const DenseGroupPtr& group);
std::string format_rep_file(const modrep::Rep& v);

struct Expectation {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// `name = expr` for a group, `name = expr @ path` for a module on it.
struct Entry {
  std::string name;
  std::string text;
  Expr expr;
  std::optional<std::string> rep_path;
  std::vector<Expectation> expect;
  std::size_t line = 0;
};

struct Manifest {
  std::filesystem::path base_dir;
  std::vector<Entry> entries;

  const Entry* find(std::string_view name) const;
};

/// Lines: `name = expr [@ path]`, indented `expect key=value ...`
/// continuations, `#` comments and blank lines.
Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir,
                        std::string_view source = "<manifest>");
Manifest load_manifest(const std::filesystem::path& path);

/// Keys a group entry may expect.
bool is_group_key(std::string_view key);
/// Keys a module entry may expect.
bool is_module_key(std::string_view key);

struct CheckedExpectation {
  Expectation expected;
  std::string actual;
  bool ok = false;
};

std::vector<CheckedExpectation> check_group(const Entry& e, const Group& g);
std::vector<CheckedExpectation> check_module(const Entry& e, const modrep::Rep& v);

/// Builds an entry's module (its group, then the rep file).
modrep::Rep build_module(const Entry& e, const std::filesystem::path& base_dir);

}  // namespace pgrp::catalog
