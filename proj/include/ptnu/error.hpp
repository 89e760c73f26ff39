#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptnu {

enum class ErrorKind {
  NegativeDiscriminant,
  NoSignChange,
  NonConvergence,
  ZeroA3,
  NonzeroA3,
  DomainError,
  InvalidIndex,
  InvalidArgument,
  NonFinite,
  GridTooSmall,
  QuadratureFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// recovery applies (widen a bracket, switch to the Laguerre limit, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroA3: return "ZeroA3";
    case ErrorKind::NonzeroA3: return "NonzeroA3";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

}  // namespace ptnu
