#pragma once

#include <stdexcept>
#include <string>

namespace wgrect {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedDomain,
  InvalidCoefficient,
  UnknownCase,
  UnsupportedCombination,
  InterfaceMisaligned,
  CaseDefinition,
  InvalidConfig,
  SolverFailure,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable category alongside the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace wgrect
