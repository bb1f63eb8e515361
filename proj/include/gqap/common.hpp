#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace gqap {

// Error type for everything user-facing: parse failures, invalid data,
// refused operations. The message is the whole contract.
class GqapError : public std::runtime_error {
  public:
    explicit GqapError(const std::string& what) : std::runtime_error(what) {}
};

// Format a double so that integer-valued data prints as a plain integer
// ("17165", not "17165.000000") and anything else round-trips exactly.
// Used by the instance serializer, the LP writer and the CSV reports, so
// output files are byte-stable across runs.
inline std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace gqap
