#include "pgrp/error.hpp"

namespace pgrp {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::capacity: return "capacity";
    case Errc::unsupported_on_engine: return "unsupported-on-engine";
    case Errc::argument: return "argument";
    case Errc::handle_mismatch: return "handle-mismatch";
    case Errc::faithfulness: return "faithfulness";
    case Errc::not_best_offender: return "not-best-offender";
    case Errc::integrity: return "integrity";
    case Errc::format: return "format";
    case Errc::representation_invalid: return "representation-invalid";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace pgrp
