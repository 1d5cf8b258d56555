// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/node.hpp"

#include <cmath>
#include <numbers>

#include "fastdvm/errors.hpp"

namespace fastdvm {

Node Node::from_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw ValueError("node angle must be finite");
    }
    return Node(std::polar(1.0, -theta), theta);
}

Node Node::from_value(std::complex<double> value) {
    if (value == std::complex<double>(0.0, 0.0) || !std::isfinite(value.real()) ||
        !std::isfinite(value.imag())) {
        throw ValueError("node value must be finite and nonzero");
    }
    return Node(value, std::nullopt);
}

bool Node::on_unit_circle() const noexcept {
    return std::abs(std::abs(value_) - 1.0) <= kUnitCircleTolerance;
}

bool Node::is_degenerate(std::size_t n) const noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (angle_) {
        for (std::size_t d = 1; d < n; ++d) {
            double r = std::fmod(std::abs(*angle_) * static_cast<double>(d), two_pi);
            if (std::min(r, two_pi - r) < kDegeneracyTolerance * two_pi) {
                return true;
            }
        }
        return false;
    }
    std::complex<double> power = 1.0;
    for (std::size_t d = 1; d < n; ++d) {
        power *= value_;
        if (std::abs(power - 1.0) < kDegeneracyTolerance) {
            return true;
        }
    }
    return false;
}

}  // namespace fastdvm
