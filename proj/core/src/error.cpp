#include "gradreveal/error.hpp"

namespace gradreveal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InputTooSmall: return "InputTooSmall";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ProtocolComplete: return "ProtocolComplete";
    case ErrorCode::IncompleteReveal: return "IncompleteReveal";
    case ErrorCode::NoDigitsRevealed: return "NoDigitsRevealed";
    case ErrorCode::InconsistentReveal: return "InconsistentReveal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gradreveal
