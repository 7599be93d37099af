#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace weylkit {

/// An enumeration hit its configured cap. Never a silent truncation.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The default cap, overridden by a positive integer in WEYLKIT_CAP.
inline std::size_t enumeration_cap(std::size_t fallback) {
    if (const char* env = std::getenv("WEYLKIT_CAP")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

}  // namespace weylkit
