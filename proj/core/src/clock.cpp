/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/clock.hpp"

#include <stdexcept>
#include <thread>

namespace fedkg {

Clock::duration SteadyClock::now() const {
    return std::chrono::duration_cast<duration>(
        std::chrono::steady_clock::now().time_since_epoch());
}

void SteadyClock::sleep_for(duration d) const {
    if (d.count() > 0) {
        std::this_thread::sleep_for(d);
    }
}

ScaledClock::ScaledClock(double scale) : scale_(scale), origin_(std::chrono::steady_clock::now()) {
    if (!(scale >= 0.0)) {
        throw std::invalid_argument("clock scale must be non-negative");
    }
}

Clock::duration ScaledClock::now() const {
    auto elapsed = std::chrono::duration_cast<duration>(std::chrono::steady_clock::now() - origin_);
    if (scale_ == 0.0) {
        return elapsed;
    }
    return duration(static_cast<duration::rep>(static_cast<double>(elapsed.count()) / scale_));
}

void ScaledClock::sleep_for(duration d) const {
    if (scale_ == 0.0 || d.count() <= 0) {
        return;
    }
    std::this_thread::sleep_for(
        duration(static_cast<duration::rep>(static_cast<double>(d.count()) * scale_)));
}

std::shared_ptr<const Clock> steady_clock() {
    static const auto clock = std::make_shared<SteadyClock>();
    return clock;
}

}  // namespace fedkg
