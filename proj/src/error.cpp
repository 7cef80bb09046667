#include "sigform/error.hpp"

namespace sigform {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidType: return "InvalidType";
    case Errc::InvalidInvolution: return "InvalidInvolution";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::RepTooLarge: return "RepTooLarge";
    case Errc::NonDominant: return "NonDominant";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NotEqualRank: return "NotEqualRank";
    case Errc::ThetaMovesHighestWeight: return "ThetaMovesHighestWeight";
    case Errc::NotARootSystem: return "NotARootSystem";
    case Errc::RealRootFound: return "RealRootFound";
    case Errc::NonIntegralDecomposition: return "NonIntegralDecomposition";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::InconsistentSignature: return "InconsistentSignature";
    case Errc::IntertwinerInconsistent: return "IntertwinerInconsistent";
  }
  return "Unknown";
}

ErrorClass classify(Errc c) {
  switch (c) {
    case Errc::InvalidType:
    case Errc::InvalidInvolution:
    case Errc::ParseError:
      return ErrorClass::Parse;
    case Errc::UnsupportedRank:
    case Errc::GroupTooLarge:
    case Errc::RepTooLarge:
    case Errc::NonDominant:
    case Errc::NonIntegral:
    case Errc::NotEqualRank:
    case Errc::ThetaMovesHighestWeight:
      return ErrorClass::Unsupported;
    case Errc::NotARootSystem:
    case Errc::RealRootFound:
    case Errc::NonIntegralDecomposition:
    case Errc::InexactDivision:
    case Errc::InconsistentSignature:
    case Errc::IntertwinerInconsistent:
      return ErrorClass::Internal;
  }
  return ErrorClass::Internal;
}

}  // namespace sigform
