#include "qreal/errors.hpp"

namespace qreal {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::Domain: return "DomainError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::StreamExhausted: return "StreamExhausted";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::OutsideRegion: return "OutsideRegion";
    case Errc::OutsideDisk: return "OutsideDisk";
    case Errc::OutsideInterval: return "OutsideInterval";
    case Errc::ToleranceUnreachable: return "ToleranceUnreachable";
    case Errc::NoDecayDetected: return "NoDecayDetected";
    case Errc::EnumerationBudget: return "EnumerationBudget";
    case Errc::Budget: return "Budget";
    case Errc::BracketingFailure: return "BracketingFailure";
    case Errc::PoleParameter: return "PoleParameter";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::Pole: return "PoleError";
    case Errc::UnreachableArgument: return "UnreachableArgument";
    case Errc::ConvergenceTooSlow: return "ConvergenceTooSlow";
    case Errc::BranchAmbiguity: return "BranchAmbiguity";
    case Errc::EvaluationFailure: return "EvaluationFailure";
  }
  return "Error";
}

}  // namespace qreal
