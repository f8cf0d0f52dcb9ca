#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctree {

enum class ErrorKind {
  UnknownSymbol,
  ArityMismatch,
  AtomNotInCarrier,
  InvalidStructure,
  InvalidProblem,
  MalformedTree,
  InvalidMeasure,
  EmptyPool,
  InsufficientPool,
  NotAttributeStructure,
  TooManyClasses,
  BudgetTooLargeForEnumeration,
  FamilyNotCostClosed,
  ContradictoryHints,
  BadTruncation,
  DuplicateLevels,
  MissingPredicate,
  InvalidTau,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ctree
