#include "wgrect/error.hpp"

namespace wgrect {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::UnsupportedDomain: return "unsupported-domain";
    case ErrorCode::InvalidCoefficient: return "invalid-coefficient";
    case ErrorCode::UnknownCase: return "unknown-case";
    case ErrorCode::UnsupportedCombination: return "unsupported-combination";
    case ErrorCode::InterfaceMisaligned: return "interface-misaligned";
    case ErrorCode::CaseDefinition: return "case-definition";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::SolverFailure: return "solver-failure";
  }
  return "unknown";
}

}  // namespace wgrect
