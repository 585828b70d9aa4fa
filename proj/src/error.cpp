#include "mixsign/error.hpp"

namespace mixsign {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::FatgraphNotPermutation: return "FatgraphNotPermutation";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::FillTooLarge: return "FillTooLarge";
    case ErrorCode::BadAttachment: return "BadAttachment";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorCode::NotReconstructible: return "NotReconstructible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mixsign
