// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "masklab/rng.hpp"

namespace masklab {

// Lower guard for sampled corruption times. t is never drawn below this, so
// the 1/t loss weight stays bounded.
inline constexpr double kMinT = 1e-4;

enum class ScheduleKind { linear };

// Noise schedule alpha(t) on t in (0, 1]: the survival probability of a clean
// token at time t. Must be non-increasing with alpha(t) in [0, 1).
struct NoiseSchedule {
    ScheduleKind kind = ScheduleKind::linear;
};

inline double schedule_alpha(const NoiseSchedule& sched, double t) {
    if (!(t > 0.0) || t > 1.0) throw std::domain_error("schedule_alpha: t must lie in (0, 1]");
    switch (sched.kind) {
        case ScheduleKind::linear:
            return 1.0 - t;
    }
    throw std::logic_error("schedule_alpha: unknown schedule kind");
}

// t ~ U(kMinT, 1].
inline double draw_t(RngStream& rng) {
    return 1.0 - rng.uniform() * (1.0 - kMinT);
}

// t ~ U(kMinT, 1 - kMinT]; used where the complement mask set must stay
// nonempty with high probability.
inline double draw_t_interior(RngStream& rng) {
    return (1.0 - kMinT) - rng.uniform() * (1.0 - 2.0 * kMinT);
}

}  // namespace masklab
