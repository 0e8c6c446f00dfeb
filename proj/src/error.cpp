#include "rooted/error.hpp"

namespace rooted {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::UniverseMismatch: return "universe-mismatch";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::NotChordal: return "not-chordal";
    case ErrorKind::ConstructionIntegrity: return "construction-integrity";
    case ErrorKind::NotInPowerSet: return "not-in-F";
    case ErrorKind::CharacterizationScope: return "characterization-scope";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace rooted
