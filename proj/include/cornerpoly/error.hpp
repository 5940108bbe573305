#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cornerpoly {

enum class ErrorKind {
  RankDeficient,
  NoIntegerSolution,
  DimensionTooLarge,
  ConeNotPointed,
  PointOutsideCone,
  EmptySail,
  NoBasisContainsTau,
  InvalidVertex,
  InvalidPoint,
  DomainError,
  NotInSemigroup,
  SearchSpaceTooLarge,
  SearchBudgetExceeded,
  Infeasible,
  Unstable,
  GenerationFailed,
  InvalidInstance,
  ShapeMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Resource caps map to a distinct CLI exit code, so they are told apart here.
bool is_resource_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cornerpoly
