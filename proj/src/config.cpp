#include "hb/config.hpp"

#include <cstdlib>
#include <string>

namespace hb {

namespace {

std::size_t env_or(const char* name, std::size_t dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    try {
        long long n = std::stoll(v);
        if (n > 0) return static_cast<std::size_t>(n);
    } catch (...) {
    }
    return dflt;
}

} // namespace

const Limits& limits() {
    static const Limits l{
        env_or("HB_MAX_TENSOR_DIM", 4096),
        env_or("HB_MAX_SINGULAR", 20),
        env_or("HB_MAX_IMAGE_LETTERS", 1000000),
        env_or("HB_MAX_SEARCH_STATES", 200000),
    };
    return l;
}

} // namespace hb
