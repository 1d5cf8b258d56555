// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/beamformer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "fastdvm/errors.hpp"
#include "fastdvm/multiply.hpp"
#include "fastdvm/random.hpp"

namespace fastdvm {

ArrayConfig ArrayConfig::with_default_period(std::size_t n_antennas, double spacing, double wave_speed,
                                             std::size_t dft_size) {
    ArrayConfig c;
    c.n_antennas = n_antennas;
    c.spacing = spacing;
    c.wave_speed = wave_speed;
    c.dft_size = dft_size;
    c.sample_period = static_cast<double>(n_antennas) * c.tau();
    return c;
}

void ArrayConfig::validate() const {
    require_power_of_two(n_antennas, 2, "ArrayConfig.n_antennas");
    require_power_of_two(dft_size, 2, "ArrayConfig.dft_size");
    if (!(spacing > 0.0) || !(wave_speed > 0.0) || !(sample_period > 0.0)) {
        throw ValueError("ArrayConfig: spacing, wave_speed and sample_period must be > 0");
    }
}

double ArrayConfig::bin_frequency(std::size_t m) const {
    if (m >= dft_size) {
        throw ValueError("bin " + std::to_string(m) + " out of range 0.." + std::to_string(dft_size - 1));
    }
    return 2.0 * std::numbers::pi * static_cast<double>(m) / (static_cast<double>(dft_size) * sample_period);
}

double ArrayConfig::bin_angle(std::size_t m) const { return bin_frequency(m) * tau(); }

SourceSpec SourceSpec::at_beam(std::size_t k, std::size_t bin, std::complex<double> amplitude) {
    SourceSpec s;
    s.beam_index = k;
    s.amplitude = amplitude;
    s.temporal_bin = bin;
    return s;
}

SourceSpec SourceSpec::from_direction(double psi, std::size_t bin, std::complex<double> amplitude) {
    SourceSpec s;
    s.direction = psi;
    s.amplitude = amplitude;
    s.temporal_bin = bin;
    return s;
}

double SourceSpec::delay(const ArrayConfig& config) const {
    if (beam_index.has_value() == direction.has_value()) {
        throw ValueError("SourceSpec: exactly one of beam_index and direction must be set");
    }
    if (beam_index) {
        if (*beam_index < 1 || *beam_index > config.n_antennas) {
            throw ValueError("beam index " + std::to_string(*beam_index) + " out of range 1.." +
                             std::to_string(config.n_antennas));
        }
        return static_cast<double>(*beam_index) * config.tau();
    }
    return config.spacing / config.wave_speed * std::sin(*direction);
}

std::shared_ptr<const FactorizationPlan<double>> PlanCache::get(std::size_t n, double theta) {
    const auto key = std::make_pair(n, std::llround(theta / 1e-15));
    std::lock_guard lock(mutex_);
    auto it = plans_.find(key);
    if (it == plans_.end()) {
        auto plan = std::make_shared<const FactorizationPlan<double>>(build_plan<double>(n, Node::from_angle(theta)));
        it = plans_.emplace(key, std::move(plan)).first;
    }
    return it->second;
}

std::size_t PlanCache::size() const {
    std::lock_guard lock(mutex_);
    return plans_.size();
}

SpectralFrame synthesize(const ArrayConfig& config, std::span<const SourceSpec> sources, double noise_level,
                         std::uint64_t seed) {
    config.validate();
    const std::size_t n = config.n_antennas;
    SpectralFrame frame{ComplexFrame(n, config.dft_size), 0};
    for (const SourceSpec& src : sources) {
        const double omega = config.bin_frequency(src.temporal_bin);
        const double delay = src.delay(config);
        for (std::size_t l = 0; l < n; ++l) {
            frame.data(l, src.temporal_bin) += src.amplitude * std::polar(1.0, omega * delay * static_cast<double>(l));
        }
    }
    if (noise_level > 0.0) {
        Rng rng(seed);
        const double sigma = noise_level / std::sqrt(2.0);
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t m = 0; m < config.dft_size; ++m) {
                const double re = rng.normal();
                frame.data(l, m) += std::complex<double>(sigma * re, sigma * rng.normal());
            }
        }
    }
    return frame;
}

SpectralFrame temporal_dft(const ComplexFrame& time_samples, const ArrayConfig& config) {
    config.validate();
    if (time_samples.rows() != config.n_antennas || time_samples.cols() != config.dft_size) {
        throw SizeError("temporal_dft: sample block must be n_antennas x dft_size");
    }
    const std::size_t m_size = config.dft_size;
    const FactorizationPlan<double> plan =
        build_plan<double>(m_size, Node::from_angle(2.0 * std::numbers::pi / static_cast<double>(m_size)));
    SpectralFrame out{ComplexFrame(config.n_antennas, m_size), 0};
    for (std::size_t l = 0; l < config.n_antennas; ++l) {
        const std::vector<std::complex<double>> spectrum = sdvm_multiply(plan, time_samples.row(l));
        for (std::size_t m = 0; m < m_size; ++m) {
            out.data(l, m) = spectrum[m];
        }
    }
    return out;
}

BeamFrame beamform(const SpectralFrame& frame, const ArrayConfig& config, const BeamformOptions& options) {
    config.validate();
    const std::size_t n = config.n_antennas;
    const std::size_t bins = config.dft_size;
    if (frame.data.rows() != n || frame.data.cols() != bins) {
        throw SizeError("beamform: frame must be n_antennas x dft_size");
    }

    BeamFrame out{ComplexFrame(n, bins), std::vector<bool>(bins, false)};
    std::vector<std::vector<std::complex<double>>> columns(bins);
    std::vector<std::shared_ptr<const FactorizationPlan<double>>> plans(bins);
    std::vector<std::size_t> work;
    bool dc_content = false;

    // Plans are resolved serially in bin order; the products below only read them.
    for (std::size_t m = 0; m < bins; ++m) {
        columns[m].resize(n);
        bool nonzero = false;
        for (std::size_t l = 0; l < n; ++l) {
            columns[m][l] = frame.data(l, m);
            nonzero = nonzero || columns[m][l] != std::complex<double>(0.0);
        }
        const double theta = config.bin_angle(m);
        out.degenerate_bins[m] = m == 0 || Node::from_angle(theta).is_degenerate(n);
        if (m == 0) {
            dc_content = nonzero;
            continue;
        }
        if (!nonzero) {
            continue;
        }
        plans[m] = options.cache ? options.cache->get(n, theta)
                                 : std::make_shared<const FactorizationPlan<double>>(
                                       build_plan<double>(n, Node::from_angle(theta)));
        work.push_back(m);
    }

    std::vector<std::vector<std::complex<double>>> results(bins);
    if (dc_content) {
        results[0] = direct_multiply<double>(n, std::complex<double>(1.0), columns[0], Variant::dvm);
    }

    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < work.size(); i += stride) {
            const std::size_t m = work[i];
            results[m] = dvm_multiply(*plans[m], std::span<const std::complex<double>>(columns[m]));
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(work.size())));
    if (threads <= 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(run, t, threads);
        }
    }

    for (std::size_t m = 0; m < bins; ++m) {
        if (results[m].empty()) {
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            out.data(k, m) = results[m][k];
        }
    }
    return out;
}

DenseMatrix<double> beam_powers(const BeamFrame& beams) {
    DenseMatrix<double> p(beams.data.rows(), beams.data.cols());
    for (std::size_t k = 0; k < p.rows(); ++k) {
        for (std::size_t m = 0; m < p.cols(); ++m) {
            p(k, m) = std::norm(beams.data(k, m));
        }
    }
    return p;
}

std::size_t argmax_beam(const DenseMatrix<double>& powers, std::size_t bin) {
    if (bin >= powers.cols() || powers.rows() == 0) {
        throw ValueError("argmax_beam: bin out of range");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < powers.rows(); ++k) {
        if (powers(k, bin) > powers(best, bin)) {
            best = k;
        }
    }
    return best + 1;
}

}  // namespace fastdvm
