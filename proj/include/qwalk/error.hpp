#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorKind {
    invalid_parameter,
    invalid_site,
    insufficient_extent,
    unsupported_topology,
    invalid_density,
    zero_projection,
    oracle_too_large,
    usage,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. The kind is stable and meant for
// callers that branch on failure mode; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qwalk
