#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supertrop {

// Diagnostic codes carried by ValidationError. Each names the first axiom or
// precondition a validator found violated.
enum class Err {
  // monoid / table axioms
  NonAssociative,
  NonCommutative,
  BadUnit,
  BadZero,
  ENotIdempotent,
  GhostKillsTangible,
  OrderIncompatible,
  GhostNotClosed,
  BadSpec,
  SizeCapExceeded,
  // STR construction
  RhoNotMultiplicative,
  RhoUnitMismatch,
  RhoKernelTooBig,
  // ideals, relations
  NotAnIdeal,
  NotGhost,
  NotTangible,
  NotTE,
  NotMFCE,
  NotMixing,
  // transmissions
  NotMultiplicative,
  UnitMismatch,
  GhostPartNotMonotone,
  NotSurjective,
  NonTrivialZeroKernel,
  NotComposable,
  // unfolding
  NotASubmonoid,
  MissingTangibles,
  ImageEscapesN,
  NotUnfolded,
  NotTangiblySurjective,
  // sections
  SC1Violated,
  SC2Violated,
  ClassWithTwoTangibles,
  NotATyrant,
  NotFiberContraction,
  // paths / equalizers
  NodeMismatch,
  LabelNotInS,
  NotSingleFiber,
  // oracle
  FiberIncompatibleSeed,
  TooLarge,
  // valuations
  NotSubadditive,
  NotDistributive,
  NotContainedInG,
  TargetNotSemiring,
  TargetsTooLarge,
  // io
  ParseError,
  UnknownName,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NonAssociative: return "NonAssociative";
    case Err::NonCommutative: return "NonCommutative";
    case Err::BadUnit: return "BadUnit";
    case Err::BadZero: return "BadZero";
    case Err::ENotIdempotent: return "ENotIdempotent";
    case Err::GhostKillsTangible: return "GhostKillsTangible";
    case Err::OrderIncompatible: return "OrderIncompatible";
    case Err::GhostNotClosed: return "GhostNotClosed";
    case Err::BadSpec: return "BadSpec";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::RhoNotMultiplicative: return "RhoNotMultiplicative";
    case Err::RhoUnitMismatch: return "RhoUnitMismatch";
    case Err::RhoKernelTooBig: return "RhoKernelTooBig";
    case Err::NotAnIdeal: return "NotAnIdeal";
    case Err::NotGhost: return "NotGhost";
    case Err::NotTangible: return "NotTangible";
    case Err::NotTE: return "NotTE";
    case Err::NotMFCE: return "NotMFCE";
    case Err::NotMixing: return "NotMixing";
    case Err::NotMultiplicative: return "NotMultiplicative";
    case Err::UnitMismatch: return "UnitMismatch";
    case Err::GhostPartNotMonotone: return "GhostPartNotMonotone";
    case Err::NotSurjective: return "NotSurjective";
    case Err::NonTrivialZeroKernel: return "NonTrivialZeroKernel";
    case Err::NotComposable: return "NotComposable";
    case Err::NotASubmonoid: return "NotASubmonoid";
    case Err::MissingTangibles: return "MissingTangibles";
    case Err::ImageEscapesN: return "ImageEscapesN";
    case Err::NotUnfolded: return "NotUnfolded";
    case Err::NotTangiblySurjective: return "NotTangiblySurjective";
    case Err::SC1Violated: return "SC1Violated";
    case Err::SC2Violated: return "SC2Violated";
    case Err::ClassWithTwoTangibles: return "ClassWithTwoTangibles";
    case Err::NotATyrant: return "NotATyrant";
    case Err::NotFiberContraction: return "NotFiberContraction";
    case Err::NodeMismatch: return "NodeMismatch";
    case Err::LabelNotInS: return "LabelNotInS";
    case Err::NotSingleFiber: return "NotSingleFiber";
    case Err::FiberIncompatibleSeed: return "FiberIncompatibleSeed";
    case Err::TooLarge: return "TooLarge";
    case Err::NotSubadditive: return "NotSubadditive";
    case Err::NotDistributive: return "NotDistributive";
    case Err::NotContainedInG: return "NotContainedInG";
    case Err::TargetNotSemiring: return "TargetNotSemiring";
    case Err::TargetsTooLarge: return "TargetsTooLarge";
    case Err::ParseError: return "ParseError";
    case Err::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw ValidationError(code, msg);
}

inline void require(bool ok, Err code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// Internal consistency failures (a theorem-backed postcondition did not hold).
// These indicate an implementation bug, not bad input.
[[noreturn]] inline void internal_error(const std::string& msg) {
  throw std::logic_error("internal consistency: " + msg);
}

}  // namespace supertrop
