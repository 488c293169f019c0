#include "thue/error.hpp"

namespace thue {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateNeighbour: return "DuplicateNeighbour";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PathNotCanonical: return "PathNotCanonical";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ListTooShort: return "ListTooShort";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace thue
