// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fastdvm/dense.hpp"
#include "fastdvm/plan.hpp"

namespace fastdvm {

using ComplexFrame = DenseMatrix<std::complex<double>>;

/// Uniform linear array and temporal binning parameters.
///
/// Antenna l receives a source matched to beam k* with inter-element delay
/// k* tau; bin m of the M-point temporal DFT has angular frequency
/// omega_m = 2 pi m / (M T). Beam k is formed with node alpha_m = exp(-i omega_m tau),
/// so its weights alpha_m^{kl} = exp(-i omega_m k tau l) undo the arrival phase
/// exp(+i omega_m k* tau l) exactly when k = k*.
struct ArrayConfig {
    std::size_t n_antennas = 16;
    double spacing = 2.5e-3;    // meters
    double wave_speed = 3.0e8;  // meters / second
    std::size_t dft_size = 8;
    double sample_period = 0.0;  // seconds, must be set

    /// Config with T = N tau, which keeps omega_m tau (N - 1) < 2 pi for every
    /// bin so no nonzero bin is degenerate.
    static ArrayConfig with_default_period(std::size_t n_antennas, double spacing, double wave_speed,
                                           std::size_t dft_size);

    void validate() const;

    double tau() const noexcept { return spacing / wave_speed; }
    double bin_frequency(std::size_t m) const;  // omega_m
    /// omega_m * tau, the angle of alpha_m = exp(-i theta).
    double bin_angle(std::size_t m) const;
};

/// A narrowband source in one temporal bin, either matched to a beam index
/// (1..N) or arriving from direction psi (radians from broadside).
struct SourceSpec {
    std::optional<std::size_t> beam_index;
    std::optional<double> direction;
    std::complex<double> amplitude{1.0, 0.0};
    std::size_t temporal_bin = 0;

    static SourceSpec at_beam(std::size_t k, std::size_t bin, std::complex<double> amplitude = 1.0);
    static SourceSpec from_direction(double psi, std::size_t bin, std::complex<double> amplitude = 1.0);

    /// Inter-element arrival delay: k* tau or (dx/c) sin psi.
    double delay(const ArrayConfig& config) const;
};

/// n_antennas x M spectra; entry (l, m) is antenna l at bin m.
struct SpectralFrame {
    ComplexFrame data;
    std::int64_t frame_index = 0;
};

/// N x M beam outputs; row r is beam k = r + 1.
struct BeamFrame {
    ComplexFrame data;
    std::vector<bool> degenerate_bins;
};

/// Caches double-precision plans keyed by (N, node angle quantized to 1e-15 rad).
class PlanCache {
public:
    std::shared_ptr<const FactorizationPlan<double>> get(std::size_t n, double theta);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::size_t, long long>, std::shared_ptr<const FactorizationPlan<double>>> plans_;
};

SpectralFrame synthesize(const ArrayConfig& config, std::span<const SourceSpec> sources, double noise_level = 0.0,
                         std::uint64_t seed = 0);

/// Per-antenna M-point DFT, computed as the scaled DVM product at exp(-2 pi i / M).
SpectralFrame temporal_dft(const ComplexFrame& time_samples, const ArrayConfig& config);

struct BeamformOptions {
    PlanCache* cache = nullptr;  // null: plans are built per bin and discarded
    unsigned threads = 1;
};

/// Beam column m = DVM(N, alpha_m) * frame column m for every bin with nonzero
/// content. Bin 0 (alpha = 1) uses the dense product; degenerate bins are flagged.
BeamFrame beamform(const SpectralFrame& frame, const ArrayConfig& config, const BeamformOptions& options = {});

DenseMatrix<double> beam_powers(const BeamFrame& beams);

/// 1-based beam index of the strongest beam in bin m.
std::size_t argmax_beam(const DenseMatrix<double>& powers, std::size_t bin);

}  // namespace fastdvm
