#ifndef RAMCC_ERROR_HPP
#define RAMCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ramcc {

enum class Err {
  DivisionByZero,
  ZeroPolynomial,
  NotPrime,
  VariableMismatch,
  PrecisionExhausted,
  NotIntegral,
  NotARoot,
  NotClosed,
  RootsNotFound,
  AdditivityViolation,
  SpanConditionViolated,
  NonIntegralInnerProduct,
  CharacterNotWild,
  IntermediateFieldUnavailable,
  IdentityViolated,
  IntegralityFailure,
  NonIntegerConductorPart,
  ZeroTensor,
  NegativeDimension,
  ParseError,
  BadInput,
  NotSupported,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, std::string msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::NotPrime: return "NotPrime";
    case Err::VariableMismatch: return "VariableMismatch";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::NotIntegral: return "NotIntegral";
    case Err::NotARoot: return "NotARoot";
    case Err::NotClosed: return "NotClosed";
    case Err::RootsNotFound: return "RootsNotFound";
    case Err::AdditivityViolation: return "AdditivityViolation";
    case Err::SpanConditionViolated: return "SpanConditionViolated";
    case Err::NonIntegralInnerProduct: return "NonIntegralInnerProduct";
    case Err::CharacterNotWild: return "CharacterNotWild";
    case Err::IntermediateFieldUnavailable: return "IntermediateFieldUnavailable";
    case Err::IdentityViolated: return "IdentityViolated";
    case Err::IntegralityFailure: return "IntegralityFailure";
    case Err::NonIntegerConductorPart: return "NonIntegerConductorPart";
    case Err::ZeroTensor: return "ZeroTensor";
    case Err::NegativeDimension: return "NegativeDimension";
    case Err::ParseError: return "ParseError";
    case Err::BadInput: return "BadInput";
    case Err::NotSupported: return "NotSupported";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ramcc

#endif
