#include "stegvcs/error.hpp"

namespace stegvcs {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::truncated_data: return "TruncatedData";
        case Errc::unsupported_maxval: return "UnsupportedMaxval";
        case Errc::not_binary: return "NotBinary";
        case Errc::payload_too_large: return "PayloadTooLarge";
        case Errc::capacity_exceeded: return "CapacityExceeded";
        case Errc::out_of_band: return "OutOfBand";
        case Errc::inconsistent_pair: return "InconsistentPair";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::band_violation: return "BandViolation";
        case Errc::bad_header: return "BadHeader";
        case Errc::body_overrun: return "BodyOverrun";
    }
    return "UnknownError";
}

}  // namespace stegvcs
