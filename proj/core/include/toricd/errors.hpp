#pragma once

#include <stdexcept>
#include <string>

namespace toricd {

enum class ErrorKind {
  InvalidInput,
  NotSublattice,
  InfiniteIndex,
  NotFullLattice,
  NotPointed,
  NotFullDimensional,
  PreconditionViolated,
  LimitExceeded,
};

const char* error_kind_name(ErrorKind kind);

class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricd
