#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ortholab {

enum class ErrorKind {
  DuplicateName,
  UnknownElement,
  CycleDetected,
  NotAPartialOrder,
  NotALattice,
  NotBounded,
  SizeLimitExceeded,
  NotOrthomodular,
  HypothesisViolated,
  ConclusionViolated,
  UnknownAxiomId,
  SyntaxError,
  TableNotTotal,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ConclusionViolated: return "ConclusionViolated";
    case ErrorKind::UnknownAxiomId: return "UnknownAxiomId";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TableNotTotal: return "TableNotTotal";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line` is set for errors that come
/// out of the structure-file parser (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)),
        kind_(kind),
        detail_(message),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " (line " + std::to_string(*line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> line_;
};

}  // namespace ortholab
