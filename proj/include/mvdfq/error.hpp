#pragma once

#include <stdexcept>
#include <string>

namespace mvdfq {

enum class Err {
  EmptyDataset,
  ConstantDimension,
  TooFewDistinctValues,
  TooFewSamples,
  DimensionMismatch,
  AlphabetMismatch,
  SymbolOutOfRange,
  InvalidParams,
  NegativeWeight,
  SingleClass,
  LengthMismatch,
  EmptyInput,
  TooFewPerClass,
  UnknownGroupKey,
  NonNumericCell,
  InconsistentColumns,
  NaNOrInf,
  DuplicateId,
  UnknownResidue,
  MissingLabel,
  MalformedFile,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mvdfq
