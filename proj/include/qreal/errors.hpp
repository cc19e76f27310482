#pragma once

#include <stdexcept>
#include <string>

namespace qreal {

enum class Errc {
  Domain,
  DivisionByZero,
  PrecisionExhausted,
  StreamExhausted,
  InsufficientData,
  SearchBudgetExceeded,
  OutsideRegion,
  OutsideDisk,
  OutsideInterval,
  ToleranceUnreachable,
  NoDecayDetected,
  EnumerationBudget,
  Budget,
  BracketingFailure,
  PoleParameter,
  ZeroDenominator,
  Pole,
  UnreachableArgument,
  ConvergenceTooSlow,
  BranchAmbiguity,
  EvaluationFailure,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace qreal
