#include "cubhom/error.hpp"

namespace cubhom {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PointNotInImage: return "PointNotInImage";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::MapNotTotal: return "MapNotTotal";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoSuchFace: return "NoSuchFace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnclassifiableCube: return "UnclassifiableCube";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace cubhom
