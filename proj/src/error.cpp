#include "penta2p/error.hpp"

namespace penta2p {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::FullRemoval: return "FullRemoval";
    case ErrorCode::NonPositiveK: return "NonPositiveK";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadGadget: return "BadGadget";
    case ErrorCode::NotPentagulation: return "NotPentagulation";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SameEndpoints: return "SameEndpoints";
    case ErrorCode::EndpointStellating: return "EndpointStellating";
    case ErrorCode::AdjacentStellating: return "AdjacentStellating";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::BadCut: return "BadCut";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace penta2p
