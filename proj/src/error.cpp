#include "tourney/error.hpp"

namespace tourney {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingArc: return "MissingArc";
    case Errc::ConflictingArc: return "ConflictingArc";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::UnrecognizedScoreSequence: return "UnrecognizedScoreSequence";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::InvalidRatio: return "InvalidRatio";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::EmptyDistribution: return "EmptyDistribution";
    case Errc::NotLocallyTransitive: return "NotLocallyTransitive";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace tourney
