#include "scenic/error.hpp"

namespace scenic {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_monic: return "NotMonic";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::degree_invalid: return "DegreeInvalid";
    case errc::retry_limit_exceeded: return "RetryLimitExceeded";
    case errc::k_max_exceeded: return "KMaxExceeded";
    case errc::no_convergence: return "NoConvergence";
    case errc::real_root_detected: return "RealRootDetected";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::quasi_reflection_present: return "QuasiReflectionPresent";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace scenic
