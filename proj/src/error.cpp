#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::invalid_site: return "invalid-site";
        case ErrorKind::insufficient_extent: return "insufficient-extent";
        case ErrorKind::unsupported_topology: return "unsupported-topology";
        case ErrorKind::invalid_density: return "invalid-density";
        case ErrorKind::zero_projection: return "zero-projection";
        case ErrorKind::oracle_too_large: return "oracle-too-large";
        case ErrorKind::usage: return "usage";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace qwalk
