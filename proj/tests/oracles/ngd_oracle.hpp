/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once
// Direct evaluation of the Normalized Google Distance for counts with
// 0 < f_xy <= min(f_x, f_y) and min(f_x, f_y) < N.

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace fedkg::testing {

inline double ngd_direct(std::uint64_t fx, std::uint64_t fy, std::uint64_t fxy, std::uint64_t n) {
    const double lx = std::log(static_cast<double>(fx));
    const double ly = std::log(static_cast<double>(fy));
    const double lxy = std::log(static_cast<double>(fxy));
    const double ln = std::log(static_cast<double>(n));
    return (std::max(lx, ly) - lxy) / (ln - std::min(lx, ly));
}

}  // namespace fedkg::testing
