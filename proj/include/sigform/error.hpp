#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigform {

enum class Errc {
  // malformed input
  InvalidType,
  InvalidInvolution,
  ParseError,
  // well-formed but outside what is supported
  UnsupportedRank,
  GroupTooLarge,
  RepTooLarge,
  NonDominant,
  NonIntegral,
  NotEqualRank,
  ThetaMovesHighestWeight,
  // internal consistency failures
  NotARootSystem,
  RealRootFound,
  NonIntegralDecomposition,
  InexactDivision,
  InconsistentSignature,
  IntertwinerInconsistent,
};

std::string_view errc_name(Errc c);

/// Coarse category used for process exit codes.
enum class ErrorClass { Parse, Unsupported, Internal };

ErrorClass classify(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace sigform
