#include <cctype>
#include <limits>

#include "pgrp/catalog.hpp"
#include "pgrp/fp.hpp"
#include "pgrp/modrep.hpp"

namespace pgrp::catalog {

std::string_view to_string(Diag d) {
  switch (d) {
    case Diag::syntax: return "syntax";
    case Diag::unknown_constructor: return "unknown-constructor";
    case Diag::arity: return "arity";
    case Diag::non_prime: return "non-prime";
    case Diag::mixed_primes: return "mixed-primes";
    case Diag::range: return "range";
  }
  return "unknown";
}

ParseError::ParseError(Diag kind, std::size_t offset, const std::string& message)
    : Error(Errc::parse, "offset " + std::to_string(offset) + ": " + std::string(to_string(kind)) +
                             ": " + message),
      kind_(kind),
      offset_(offset) {}

unsigned Expr::prime() const {
  switch (ctor) {
    case Ctor::cyclic:
    case Ctor::elementary_abelian:
    case Ctor::extraspecial:
    case Ctor::wreath:
      return static_cast<unsigned>(nums.at(0));
    case Ctor::direct_product:
    case Ctor::semidirect:
      return args.at(0).prime();
    case Ctor::from_file:
      return 0;
  }
  return 0;
}

namespace {

bool odd_prime(std::uint64_t n) { return n > 2 && n <= 4093 && fp::is_prime(n); }

bool path_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '/' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ < s_.size()) error(Diag::syntax, i_, "unexpected " + found() + " after expression");
    return e;
  }

 private:
  [[noreturn]] void error(Diag kind, std::size_t at, const std::string& msg) const {
    throw ParseError(kind, at + 1, msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string found() const {
    return i_ < s_.size() ? "'" + std::string(1, s_[i_]) + "'" : "end of input";
  }

  void expect(char c, std::string_view what) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c)
      error(Diag::syntax, i_, "expected " + std::string(what) + ", found " + found());
    ++i_;
  }

  std::uint64_t number(std::size_t& at) {
    skip();
    at = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      error(Diag::syntax, i_, "expected number, found " + found());
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const unsigned d = static_cast<unsigned>(s_[i_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        error(Diag::range, at, "number too large");
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }

  std::string path() {
    skip();
    std::string out;
    if (i_ < s_.size() && s_[i_] == '"') {
      const std::size_t start = i_++;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        out += s_[i_++];
      }
      if (i_ >= s_.size()) error(Diag::syntax, start, "unterminated string");
      ++i_;
      if (out.empty()) error(Diag::syntax, start, "empty path");
      return out;
    }
    while (i_ < s_.size() && path_char(s_[i_])) out += s_[i_++];
    if (out.empty()) error(Diag::syntax, i_, "expected path, found " + found());
    return out;
  }

  // Separator between arguments: ',' continues, ')' means too few.
  void next_arg(std::size_t ctor_at, const std::string& name, std::size_t want) {
    skip();
    if (i_ < s_.size() && s_[i_] == ')')
      error(Diag::arity, ctor_at, name + " takes " + std::to_string(want) + " arguments");
    expect(',', "','");
  }

  void close(std::size_t ctor_at, const std::string& name, std::size_t want) {
    skip();
    if (i_ < s_.size() && s_[i_] == ',')
      error(Diag::arity, ctor_at,
            name + " takes " + std::to_string(want) + (want == 1 ? " argument" : " arguments"));
    expect(')', "')'");
  }

  void require_prime(std::uint64_t p, std::size_t at) {
    if (!odd_prime(p)) error(Diag::non_prime, at, std::to_string(p) + " is not an odd prime");
  }

  void require_same(unsigned p, unsigned q, std::size_t at) {
    if (p && q && p != q)
      error(Diag::mixed_primes, at, "mixes primes " + std::to_string(p) + " and " + std::to_string(q));
  }

  Expr atom(const std::string& name, std::size_t at) {
    if (name.size() < 2 || name[0] != 'C' ||
        name.find_first_not_of("0123456789", 1) != std::string::npos)
      error(Diag::unknown_constructor, at, "unknown group '" + name + "'");
    std::uint64_t n = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (n > std::numeric_limits<std::uint64_t>::max() / 10) error(Diag::range, at, "order too large");
      n = n * 10 + static_cast<unsigned>(name[k] - '0');
    }
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= n && d <= 4093; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    unsigned k = 0;
    std::uint64_t m = n;
    while (p && m % p == 0) m /= p, ++k;
    if (p == 0 || m != 1 || !odd_prime(p))
      error(Diag::non_prime, at, "C" + std::to_string(n) + " is not of odd prime-power order");
    Expr e;
    e.offset = at + 1;
    e.ctor = Ctor::cyclic;
    e.nums = {p, k};
    return e;
  }

  Expr expr() {
    skip();
    const std::size_t at = i_;
    std::string name;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      name += s_[i_++];
    if (name.empty()) error(Diag::syntax, at, "expected expression, found " + found());
    skip();
    if (i_ >= s_.size() || s_[i_] != '(') return atom(name, at);
    ++i_;

    Expr e;
    e.offset = at + 1;
    std::size_t pa = 0, oa = 0, xa = 0;
    if (name == "EA") {
      e.ctor = Ctor::elementary_abelian;
      const std::uint64_t p = number(pa);
      require_prime(p, pa);
      next_arg(at, name, 2);
      const std::uint64_t r = number(oa);
      if (r < 1 || r > 64) error(Diag::range, oa, "rank must lie between 1 and 64");
      close(at, name, 2);
      e.nums = {p, r};
    } else if (name == "ES") {
      e.ctor = Ctor::extraspecial;
      const std::uint64_t p = number(pa);
      require_prime(p, pa);
      next_arg(at, name, 3);
      const std::uint64_t order = number(oa);
      unsigned n = 0;
      std::uint64_t m = order;
      while (m > 1 && m % p == 0) m /= p, ++n;
      if (m != 1 || n < 3 || n % 2 == 0) error(Diag::range, oa, "order must be p^(1+2m) with m >= 1");
      next_arg(at, name, 3);
      const std::uint64_t x = number(xa);
      if (x != p && x != p * p) error(Diag::range, xa, "exponent must be p or p^2");
      close(at, name, 3);
      e.nums = {p, order, x};
    } else if (name == "DP") {
      e.ctor = Ctor::direct_product;
      e.args.push_back(expr());
      next_arg(at, name, 2);
      e.args.push_back(expr());
      close(at, name, 2);
      require_same(e.args[0].prime(), e.args[1].prime(), e.args[1].offset - 1);
    } else if (name == "WR") {
      e.ctor = Ctor::wreath;
      e.args.push_back(expr());
      next_arg(at, name, 2);
      const std::uint64_t p = number(pa);
      require_prime(p, pa);
      close(at, name, 2);
      require_same(e.args[0].prime(), static_cast<unsigned>(p), pa);
      e.nums = {p};
    } else if (name == "SDP") {
      e.ctor = Ctor::semidirect;
      e.args.push_back(expr());
      next_arg(at, name, 2);
      e.path = path();
      close(at, name, 2);
    } else if (name == "FROM") {
      e.ctor = Ctor::from_file;
      e.path = path();
      close(at, name, 1);
    } else {
      error(Diag::unknown_constructor, at, "unknown constructor '" + name + "'");
    }
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string print_path(const std::string& p) {
  bool bare = !p.empty();
  for (char c : p) bare = bare && path_char(c);
  if (bare) return p;
  std::string out = "\"";
  for (char c : p) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  auto n = [&](std::size_t i) { return std::to_string(e.nums.at(i)); };
  switch (e.ctor) {
    case Ctor::cyclic: return "C" + std::to_string(ipow(e.nums.at(0), e.nums.at(1)));
    case Ctor::elementary_abelian: return "EA(" + n(0) + "," + n(1) + ")";
    case Ctor::extraspecial: return "ES(" + n(0) + "," + n(1) + "," + n(2) + ")";
    case Ctor::direct_product:
      return "DP(" + print_expr(e.args.at(0)) + "," + print_expr(e.args.at(1)) + ")";
    case Ctor::wreath: return "WR(" + print_expr(e.args.at(0)) + "," + n(0) + ")";
    case Ctor::semidirect: return "SDP(" + print_expr(e.args.at(0)) + "," + print_path(e.path) + ")";
    case Ctor::from_file: return "FROM(" + print_path(e.path) + ")";
  }
  return {};
}

Group build(const Expr& e, const std::filesystem::path& base_dir) {
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  switch (e.ctor) {
    case Ctor::cyclic:
      return cyclic(static_cast<unsigned>(e.nums[0]), static_cast<unsigned>(e.nums[1]));
    case Ctor::elementary_abelian:
      return elementary_abelian(static_cast<unsigned>(e.nums[0]), static_cast<unsigned>(e.nums[1]));
    case Ctor::extraspecial:
      return extraspecial(static_cast<unsigned>(e.nums[0]), e.nums[1], e.nums[2]);
    case Ctor::direct_product:
      return direct_product(build(e.args[0], base_dir), build(e.args[1], base_dir));
    case Ctor::wreath:
      return wreath(build(e.args[0], base_dir), static_cast<unsigned>(e.nums[0]));
    case Ctor::semidirect: {
      const Group g = build(e.args[0], base_dir);
      return modrep::semidirect_group(load_rep(resolve(e.path), g.dense()));
    }
    case Ctor::from_file:
      return load_group(resolve(e.path));
  }
  fail(Errc::argument, "unhandled constructor");
}

Group build(std::string_view text, const std::filesystem::path& base_dir) {
  return build(parse_expr(text), base_dir);
}

}  // namespace pgrp::catalog
