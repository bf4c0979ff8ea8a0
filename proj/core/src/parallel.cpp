#include "nlsphere/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace nlsphere {

unsigned thread_limit()
{
    if (const char* env = std::getenv("NLSPHERE_THREADS")) {
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace nlsphere
