/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <chrono>
#include <memory>

namespace fedkg {

// Time source for simulated latency and retry backoff.
class Clock {
public:
    using duration = std::chrono::microseconds;

    virtual ~Clock() = default;
    virtual duration now() const = 0;
    virtual void sleep_for(duration d) const = 0;
};

class SteadyClock final : public Clock {
public:
    duration now() const override;
    void sleep_for(duration d) const override;
};

// Simulated time runs `1/scale` times faster than wall time: sleeping for d blocks for
// d * scale. With scale == 0 sleeps return immediately (latency has no wall-clock cost).
class ScaledClock final : public Clock {
public:
    explicit ScaledClock(double scale);

    duration now() const override;
    void sleep_for(duration d) const override;
    double scale() const noexcept { return scale_; }

private:
    double scale_;
    std::chrono::steady_clock::time_point origin_;
};

std::shared_ptr<const Clock> steady_clock();

}  // namespace fedkg
