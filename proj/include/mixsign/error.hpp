#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixsign {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  DuplicateVertex,
  BadSign,
  FatgraphNotPermutation,
  UnknownVertex,
  NotBipartite,
  IndexOutOfRange,
  ZeroParameter,
  InternalInconsistency,
  CertificationFailure,
  EmptyGraph,
  ZeroPolynomial,
  NotMonic,
  DegreeTooSmall,
  FillTooLarge,
  BadAttachment,
  BadParameters,
  ZeroMultiplicity,
  NotReconstructible,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mixsign
