#include <charconv>
#include <fstream>
#include <sstream>

#include "pgrp/catalog.hpp"
#include "pgrp/fp.hpp"

namespace pgrp::catalog {

namespace {

class Lines {
 public:
  Lines(std::string_view text, std::string_view source) : source_(source) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
    while (!lines_.empty() && lines_.back().find_first_not_of(" \t") == std::string_view::npos)
      lines_.pop_back();
  }

  bool done() const { return next_ >= lines_.size(); }
  std::size_t line_number() const { return next_; }  // 1-based number of the last line read

  std::string_view next(std::string_view what) {
    if (done()) error(next_ + 1, "unexpected end of file, expected " + std::string(what));
    return lines_[next_++];
  }

  [[noreturn]] void error(std::size_t line, const std::string& msg) const {
    fail(Errc::format, std::string(source_) + ":" + std::to_string(line) + ": " + msg);
  }
  [[noreturn]] void error(const std::string& msg) const { error(next_, msg); }

 private:
  std::string_view source_;
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view w) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) return std::nullopt;
  return v;
}

// "key <number>" on a line of its own.
std::uint64_t keyed(Lines& in, std::string_view key) {
  auto w = words(in.next(key));
  std::optional<std::uint64_t> v;
  if (w.size() == 2 && w[0] == key) v = to_uint(w[1]);
  if (!v) in.error("expected '" + std::string(key) + " <n>'");
  return *v;
}

unsigned read_prime(Lines& in) {
  const std::uint64_t p = keyed(in, "p");
  if (p < 3 || p > 4093 || !fp::is_prime(p)) in.error("p must be an odd prime");
  return static_cast<unsigned>(p);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::format, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Group parse_group_file(std::string_view text, std::string_view source) {
  Lines in(text, source);
  if (in.next("header") != "pgrp v1") in.error("expected header 'pgrp v1'");
  const unsigned p = read_prime(in);
  auto kind = words(in.next("kind"));
  if (kind.size() != 2 || kind[0] != "kind" || (kind[1] != "table" && kind[1] != "perm"))
    in.error("expected 'kind table' or 'kind perm'");

  if (kind[1] == "table") {
    const std::uint64_t n = keyed(in, "order");
    if (n == 0 || n > dense_capacity) in.error("order must lie between 1 and " + std::to_string(dense_capacity));
    std::vector<Elem> table;
    table.reserve(n * n);
    for (std::uint64_t r = 0; r < n; ++r) {
      auto w = words(in.next("table row"));
      if (w.size() != n) in.error("row has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
      for (auto x : w) {
        auto v = to_uint(x);
        if (!v || *v >= n) in.error("bad table entry '" + std::string(x) + "'");
        table.push_back(static_cast<Elem>(*v));
      }
    }
    if (!in.done()) in.error(in.line_number() + 1, "trailing content after the table");
    try {
      return Group::from_dense(DenseGroup::create(p, std::move(table)));
    } catch (const Error& e) {
      fail(e.code(), std::string(source) + ": " + e.what());
    }
  }

  const std::uint64_t degree = keyed(in, "degree");
  if (degree == 0 || degree > 100000) in.error("degree out of range");
  std::vector<Perm> gens;
  while (!in.done()) {
    std::string_view line = in.next("generator");
    try {
      gens.push_back(Perm::parse_cycles(line, degree));
    } catch (const Error& e) {
      in.error(e.what());
    }
  }
  if (gens.empty()) in.error("perm file lists no generators");
  try {
    return Group::from_perm(PermGroup(p, degree, std::move(gens)));
  } catch (const Error& e) {
    fail(e.code(), std::string(source) + ": " + e.what());
  }
}

Group load_group(const std::filesystem::path& path) {
  return parse_group_file(read_file(path), path.string());
}

std::string format_group_file(const Group& g, GroupFileKind kind) {
  std::ostringstream out;
  out << "pgrp v1\np " << g.prime() << "\n";
  if (kind == GroupFileKind::table) {
    const DenseGroup& d = *g.dense();
    out << "kind table\norder " << d.order() << "\n";
    for (std::size_t a = 0; a < d.order(); ++a) {
      for (std::size_t b = 0; b < d.order(); ++b) {
        if (b) out << ' ';
        out << d.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      }
      out << "\n";
    }
    return out.str();
  }
  const PermGroup perm = g.to_perm();
  out << "kind perm\ndegree " << perm.degree() << "\n";
  for (const auto& s : perm.generators()) out << s.to_cycles() << "\n";
  return out.str();
}

modrep::Rep parse_rep_file(std::string_view text, const DenseGroupPtr& group, std::string_view source) {
  Lines in(text, source);
  if (in.next("header") != "fprep v1") in.error("expected header 'fprep v1'");
  const unsigned p = read_prime(in);
  const std::uint64_t dim = keyed(in, "dim");
  if (dim == 0 || dim > 729) in.error("dim must lie between 1 and 729");
  if (p != group->prime())
    fail(Errc::representation_invalid, std::string(source) + ": module prime " + std::to_string(p) +
                                           " differs from the group's prime " +
                                           std::to_string(group->prime()));

  std::vector<fp::Matrix> images;
  while (!in.done()) {
    auto head = words(in.next("gen"));
    std::optional<std::uint64_t> idx;
    if (head.size() == 2 && head[0] == "gen") idx = to_uint(head[1]);
    if (!idx) in.error("expected 'gen <index>'");
    if (*idx != images.size())
      in.error("expected 'gen " + std::to_string(images.size()) + "', generators must appear in order");
    fp::Matrix m(p, dim, dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
      auto w = words(in.next("matrix row"));
      if (w.size() != dim) in.error("row has " + std::to_string(w.size()) + " entries, expected " + std::to_string(dim));
      for (std::uint64_t c = 0; c < dim; ++c) {
        auto v = to_uint(w[c]);
        if (!v || *v >= p) in.error("entry '" + std::string(w[c]) + "' is not a residue mod " + std::to_string(p));
        m(r, c) = static_cast<fp::Residue>(*v);
      }
    }
    images.push_back(std::move(m));
  }
  if (images.size() != group->generators().size())
    fail(Errc::representation_invalid, std::string(source) + ": " + std::to_string(images.size()) +
                                           " generator matrices for a group with " +
                                           std::to_string(group->generators().size()) + " generators");
  try {
    return modrep::Rep::from_generator_images(group, std::move(images));
  } catch (const Error& e) {
    fail(e.code(), std::string(source) + ": " + e.what());
  }
}

modrep::Rep load_rep(const std::filesystem::path& path, const DenseGroupPtr& group) {
  return parse_rep_file(read_file(path), group, path.string());
}

std::string format_rep_file(const modrep::Rep& v) {
  std::ostringstream out;
  out << "fprep v1\np " << v.prime() << "\ndim " << v.dim() << "\n";
  const auto& gens = v.group()->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out << "gen " << i << "\n";
    const fp::Matrix& m = v.matrix(gens[i]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) out << ' ';
        out << m(r, c);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace pgrp::catalog
