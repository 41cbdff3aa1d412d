#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class Errc {
  MissingArc,
  ConflictingArc,
  SelfLoop,
  VertexOutOfRange,
  WrongOrder,
  UnrecognizedScoreSequence,
  EvenOrder,
  InvalidRatio,
  NotAnArc,
  OrderTooSmall,
  EmptyDistribution,
  NotLocallyTransitive,
  NotBalanced,
  OutOfDomain,
  InvalidArgument,
  InvalidOrder,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every precondition or validation failure in the library is reported as an
/// Error carrying one of the codes above. I/O problems surface as ParseError.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tourney
