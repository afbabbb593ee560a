#include "patchant/error.hpp"

namespace patchant {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Bracket: return "bracket error";
    case ErrorKind::Convergence: return "convergence error";
    case ErrorKind::Synthesis: return "synthesis error";
    case ErrorKind::Singularity: return "singularity error";
    case ErrorKind::Configuration: return "configuration error";
    case ErrorKind::ModelRange: return "model-range error";
    case ErrorKind::NoSolution: return "no-solution error";
    case ErrorKind::Io: return "I/O error";
  }
  return "error";
}

}  // namespace patchant
