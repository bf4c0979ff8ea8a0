#pragma once

#include <mutex>

namespace nlsphere::detail {

// FFTW's planner is not reentrant; plan creation and destruction go through this lock.
inline std::mutex& fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

}  // namespace nlsphere::detail
