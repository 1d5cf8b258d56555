// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>

namespace fastdvm {

/// The complex generator alpha of a delay Vandermonde matrix.
///
/// A node built from an angle theta carries alpha = exp(-i*theta), where theta
/// is the phase rotation omega*tau of one inter-element delay. The angle is
/// kept alongside the value so degeneracy (a repeated matrix node) can be
/// detected exactly on the angle rather than on rounded powers.
class Node {
public:
    static Node from_angle(double theta);
    static Node from_value(std::complex<double> value);

    std::complex<double> value() const noexcept { return value_; }
    std::optional<double> angle() const noexcept { return angle_; }

    template <class Real>
    std::complex<Real> value_as() const noexcept {
        return {static_cast<Real>(value_.real()), static_cast<Real>(value_.imag())};
    }

    /// |alpha| == 1 within 1e-12.
    bool on_unit_circle() const noexcept;

    /// True iff alpha^d == 1 for some 1 <= d <= n-1, i.e. the nodes
    /// alpha, alpha^2, ..., alpha^n are not distinct.
    bool is_degenerate(std::size_t n) const noexcept;

private:
    Node(std::complex<double> value, std::optional<double> angle) : value_(value), angle_(angle) {}

    std::complex<double> value_;
    std::optional<double> angle_;
};

inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kUnitCircleTolerance = 1e-12;

}  // namespace fastdvm
