#include "cornerpoly/error.hpp"

namespace cornerpoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ConeNotPointed: return "ConeNotPointed";
    case ErrorKind::PointOutsideCone: return "PointOutsideCone";
    case ErrorKind::EmptySail: return "EmptySail";
    case ErrorKind::NoBasisContainsTau: return "NoBasisContainsTau";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

bool is_resource_error(ErrorKind kind) {
  return kind == ErrorKind::SearchSpaceTooLarge || kind == ErrorKind::SearchBudgetExceeded ||
         kind == ErrorKind::DimensionTooLarge || kind == ErrorKind::Unstable;
}

}  // namespace cornerpoly
