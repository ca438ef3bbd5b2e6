#pragma once

#include <cmath>
#include <sstream>

#include "tcdeg/errors.hpp"
#include "tcdeg/log.hpp"

namespace tcdeg {

inline constexpr double kClampSlack = 1e-9;

// Concurrence values within kClampSlack outside [0, 1] are rounding and get
// clamped; anything further out is an upstream bug.
inline double clamp_concurrence(double c) {
    if (!std::isfinite(c)) throw NumericalError("concurrence is not finite");
    if (c < -kClampSlack || c > 1.0 + kClampSlack) {
        std::ostringstream os;
        os.precision(17);
        os << "concurrence " << c << " outside [0, 1] beyond clamp slack";
        throw NumericalError(os.str());
    }
    if (c < 0.0 || c > 1.0) {
        std::ostringstream os;
        os.precision(17);
        os << "clamping concurrence " << c;
        log::debug(os.str());
        return c < 0.0 ? 0.0 : 1.0;
    }
    return c;
}

}  // namespace tcdeg
