#include "specrep/errors.hpp"

namespace specrep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kUsage: return "UsageError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotMonic: return "NotMonic";
    case ErrorKind::kNotSquarefree: return "NotSquarefree";
    case ErrorKind::kNotSmooth: return "NotSmooth";
    case ErrorKind::kBranchPointNotRational: return "BranchPointNotRational";
    case ErrorKind::kRealRamification: return "RealRamification";
    case ErrorKind::kNotRealRooted: return "NotRealRooted";
    case ErrorKind::kNotHyperbolic: return "NotHyperbolic";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kIndefiniteForm: return "IndefiniteForm";
    case ErrorKind::kNonTermination: return "NonTermination";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kInternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace specrep
