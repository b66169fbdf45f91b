#include "conred/error.hpp"

namespace conred {

const char* errc_name(errc code) {
    switch (code) {
    case errc::empty_descriptor: return "EmptyDescriptor";
    case errc::negative_symmetric_degree: return "NegativeSymmetricDegree";
    case errc::bad_length: return "BadLength";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_generic: return "NotGeneric";
    case errc::not_uniform: return "NotUniform";
    case errc::moment_hits_zero: return "MomentHitsZero";
    case errc::diagonal_ray: return "DiagonalRay";
    case errc::critical_ray: return "CriticalRay";
    case errc::empty_side: return "EmptySide";
    case errc::on_boundary: return "OnBoundary";
    case errc::outside_image: return "OutsideImage";
    case errc::probe_outside_wedge: return "ProbeOutsideWedge";
    case errc::out_of_range: return "OutOfRange";
    case errc::too_small: return "TooSmall";
    case errc::max_resamples_exceeded: return "MaxResamplesExceeded";
    case errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

} // namespace conred
