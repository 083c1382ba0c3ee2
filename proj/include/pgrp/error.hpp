#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgrp {

enum class Errc {
  dimension_mismatch,
  capacity,
  unsupported_on_engine,
  argument,
  handle_mismatch,
  faithfulness,
  not_best_offender,
  integrity,
  format,
  representation_invalid,
  parse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pgrp
