#pragma once

/**
 * @file errors.hpp
 * @brief Structured error model shared by every module.
 *
 * Domain failures carry a machine-readable code plus an optional 1-based
 * position payload (a polygon x-coordinate or a block index, depending on the
 * code). The CLI maps these to error JSON and exit codes without ever showing
 * a stack trace.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace newton_strata {

/// Machine-readable failure codes. Names are stable: they appear verbatim in
/// error JSON emitted by the CLI.
enum class ErrorCode {
  // Polygon-level problems.
  EmptyPolygon,
  NotDominant,
  DimensionMismatch,
  // Newton-class validation.
  InvalidRank,
  NonIntegerBreakpoint,           // payload: x-coordinate
  SymmetryViolation,              // payload: pair index i
  NonIntegralSymmetryConstant,
  NonIntegerTotal,
  // Partitions and Levi structure.
  InvalidPartition,
  PartitionMismatch,
  ReductionUnavailable,
  NonIntegerDi,                   // payload: block index i
  DiOutOfRange,                   // payload: block index i
  // Shapes and decision preconditions.
  NotMinuscule,
  NotACocharacter,
  NotBasic,
  HypothesisViolated,
  // Enumeration and I/O.
  CandidateLimitExceeded,
  MalformedInput,
  InternalError,
};

/// Stable string form of a code (used as the "error" field in JSON).
inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPolygon: return "EmptyPolygon";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::NonIntegerBreakpoint: return "NonIntegerBreakpoint";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NonIntegralSymmetryConstant:
      return "NonIntegralSymmetryConstant";
    case ErrorCode::NonIntegerTotal: return "NonIntegerTotal";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::ReductionUnavailable: return "ReductionUnavailable";
    case ErrorCode::NonIntegerDi: return "NonIntegerDi";
    case ErrorCode::DiOutOfRange: return "DiOutOfRange";
    case ErrorCode::NotMinuscule: return "NotMinuscule";
    case ErrorCode::NotACocharacter: return "NotACocharacter";
    case ErrorCode::NotBasic: return "NotBasic";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::CandidateLimitExceeded: return "CandidateLimitExceeded";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

/// Exception type for all domain failures. `position()` is the 1-based
/// x-coordinate or block/pair index for the codes that carry one.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message,
              std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code),
        position_(position) {}

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

/// Internal-consistency failure: indicates a bug in this library, never bad
/// user input.
inline DomainError internal_error(const std::string& message) {
  return DomainError(ErrorCode::InternalError, message);
}

}  // namespace newton_strata
