#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patchant {

enum class ErrorKind {
  Domain,         // input outside the documented domain of an operation
  Bracket,        // root bracket without a sign change
  Convergence,    // iterative solver hit its iteration cap
  Synthesis,      // geometry synthesis produced a non-physical intermediate
  Singularity,    // formula evaluated at (or next to) a pole
  Configuration,  // unknown model variant, bad config key, etc.
  ModelRange,     // closed-form model evaluated where it breaks down
  NoSolution,     // requested target is not reachable
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace patchant
