#include "mvdfq/error.hpp"

namespace mvdfq {

const char* err_name(Err e) {
  switch (e) {
    case Err::EmptyDataset: return "EmptyDataset";
    case Err::ConstantDimension: return "ConstantDimension";
    case Err::TooFewDistinctValues: return "TooFewDistinctValues";
    case Err::TooFewSamples: return "TooFewSamples";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::AlphabetMismatch: return "AlphabetMismatch";
    case Err::SymbolOutOfRange: return "SymbolOutOfRange";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NegativeWeight: return "NegativeWeight";
    case Err::SingleClass: return "SingleClass";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::EmptyInput: return "EmptyInput";
    case Err::TooFewPerClass: return "TooFewPerClass";
    case Err::UnknownGroupKey: return "UnknownGroupKey";
    case Err::NonNumericCell: return "NonNumericCell";
    case Err::InconsistentColumns: return "InconsistentColumns";
    case Err::NaNOrInf: return "NaNOrInf";
    case Err::DuplicateId: return "DuplicateId";
    case Err::UnknownResidue: return "UnknownResidue";
    case Err::MissingLabel: return "MissingLabel";
    case Err::MalformedFile: return "MalformedFile";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace mvdfq
