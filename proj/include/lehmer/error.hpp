#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lehmer {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  InvalidModulus,
  NotDivisible,
  ZeroArgument,
  WrongField,
  DegreeMismatch,
  ConstantForm,
  ZeroParameter,
  NotCoprime,
  BothUnits,
  RatioRootOfUnity,
  OracleMismatch,
  PreconditionViolated,
  ConfigInvalid,
  ParseError,
  UnsupportedField,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::WrongField: return "WrongField";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ConstantForm: return "ConstantForm";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BothUnits: return "BothUnits";
    case Errc::RatioRootOfUnity: return "RatioRootOfUnity";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedField: return "UnsupportedField";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI prints the code name verbatim.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace lehmer
