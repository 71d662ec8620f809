#pragma once

#include <stdexcept>
#include <string>

namespace gorenstein {

enum class ErrorCode {
  Parse,
  InvalidField,
  DivisionByZero,
  RingMismatch,
  UnsupportedOrder,
  NotArtinian,
  NotLocalArtinian,
  NotCohen,
  NotGorenstein,
  NotAnIdeal,
  ImproperIdeal,
  GeneratorsFail,
  VariableCollision,
  TrivialComponent,
  SocleNotGenerating,
  LoewyTooSmall,
  CertificateMismatch,
  SetupViolation,
  CharacteristicTooSmall,
  ResourceLimit,
  InversionImpossible,
  InvalidArgument,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::NotLocalArtinian: return "NotLocalArtinian";
    case ErrorCode::NotCohen: return "NotCohen";
    case ErrorCode::NotGorenstein: return "NotGorenstein";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::GeneratorsFail: return "GeneratorsFail";
    case ErrorCode::VariableCollision: return "VariableCollision";
    case ErrorCode::TrivialComponent: return "TrivialComponent";
    case ErrorCode::SocleNotGenerating: return "SocleNotGenerating";
    case ErrorCode::LoewyTooSmall: return "LoewyTooSmall";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::SetupViolation: return "SetupViolation";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InversionImpossible: return "InversionImpossible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}
  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace gorenstein
