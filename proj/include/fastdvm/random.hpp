// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace fastdvm {

/// Seeded generator with a portable mapping to doubles (the standard
/// distributions are implementation-defined, so tables would differ between
/// standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Derives an independent stream for (seed, a, b) so each table row owns its draws.
    static Rng derived(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        Rng rng(0);
        rng.engine_.seed(seq);
        return rng;
    }

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal by Box-Muller.
    double normal() {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        return r * std::cos(2.0 * std::numbers::pi * uniform());
    }

    std::vector<std::complex<double>> uniform_real_vector(std::size_t n) {
        std::vector<std::complex<double>> z(n);
        for (auto& v : z) {
            v = {uniform(), 0.0};
        }
        return z;
    }

    std::vector<std::complex<double>> uniform_complex_vector(std::size_t n) {
        std::vector<std::complex<double>> z(n);
        for (auto& v : z) {
            const double re = uniform();
            v = {re, uniform()};
        }
        return z;
    }

    /// Complex vector with entries uniform in the square [-1, 1]^2, scaled to unit 2-norm.
    std::vector<std::complex<double>> unit_vector(std::size_t n) {
        std::vector<std::complex<double>> z(n);
        double norm2 = 0.0;
        for (auto& v : z) {
            const double re = uniform(-1.0, 1.0);
            v = {re, uniform(-1.0, 1.0)};
            norm2 += std::norm(v);
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& v : z) {
            v *= scale;
        }
        return z;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fastdvm
