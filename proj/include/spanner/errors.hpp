#pragma once

#include <stdexcept>
#include <string>

namespace spanner {

// Status codes shared with the C API (see include/spanner.h).
enum class Errc : int {
    ok = 0,
    invalid_params = 1,
    duplicate_points = 2,
    invalid_stretch = 3,
    unknown_vertex = 4,
    unknown_edge = 5,
    degenerate_overlap = 6,
    coincident_crossings = 7,
    not_crossing = 8,
    disconnected = 9,
    no_long_edge = 10,
    separator_guarantee = 11,
    io_error = 12,
    parse_error = 13,
    internal = 14,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, Errc code, const std::string& message) {
    if (!cond) raise(code, message);
}

}  // namespace spanner
