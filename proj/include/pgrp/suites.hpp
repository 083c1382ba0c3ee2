#pragma once

// Verification suites over the bundled catalog. Each suite records one
// pass/fail/vacuous outcome per (instance, property) pair.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pgrp::suites {

enum class Status { pass, fail, vacuous };

struct Record {
  std::string instance;
  std::string property;
  Status status = Status::pass;
  std::string detail;
};

struct Counts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Record> records;
  std::vector<std::pair<std::string, std::string>> notes;

  /// Property names in order of first appearance.
  std::vector<std::string> properties() const;
  Counts counts(std::string_view property) const;
  Counts totals() const;
  /// Distinct instance ids with at least one record of `property` in `status`.
  std::size_t instances(std::string_view property, Status status) const;
  std::size_t instances() const;
  const std::string* note(std::string_view key) const;
  bool ok() const { return totals().fail == 0; }
};

struct Options {
  std::filesystem::path catalog_dir;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

/// Errc::argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const Options& options);

/// Deterministic `key: value` report; records are sorted by instance id.
void print(std::ostream& os, const SuiteResult& result);

}  // namespace pgrp::suites
