// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/error_analysis.hpp"

#include <cmath>
#include <ostream>

#include "fastdvm/errors.hpp"
#include "fastdvm/io.hpp"
#include "fastdvm/random.hpp"

namespace fastdvm {
namespace {

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return std::sqrt(s);
}

double norm2(std::span<const std::complex<double>> x) {
    double s = 0.0;
    for (const auto& v : x) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

std::vector<double> chain_recurse(const FactorizationPlan<double>& plan, std::size_t s, std::span<const double> x,
                                  Variant variant) {
    if (s == plan.levels.size()) {
        const double b = std::abs(plan.base_node);
        if (variant == Variant::scaled) {
            return {x[0] + x[1], x[0] + b * x[1]};
        }
        return {x[0] + b * x[1], x[0] + std::abs(plan.base_node_sq) * x[1]};
    }

    const PlanLevel<double>& level = plan.levels[s];
    const std::size_t m = level.half();
    std::vector<double> in(x.begin(), x.end());
    if (variant == Variant::dvm) {
        for (std::size_t k = 0; k < in.size(); ++k) {
            in[k] *= std::abs(level.d_scale[k]);
        }
    }

    // |Ct| = [ I  |C^m| ; |Dt|  |alpha^m| |C^m| |Dt| ]
    auto abs_companion = [&](std::span<const double> v) {
        std::vector<double> out(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                out[i] += std::abs(level.companion_power(i, j)) * v[j];
            }
        }
        return out;
    };
    std::vector<double> r(level.level_size);
    const std::vector<double> top = abs_companion(std::span<const double>(in).subspan(m));
    std::vector<double> scaled_bot(m);
    for (std::size_t i = 0; i < m; ++i) {
        scaled_bot[i] = std::abs(level.d_tilde[i]) * in[m + i];
    }
    const std::vector<double> bot = abs_companion(scaled_bot);
    const double half_power = std::abs(level.node_half_power);
    for (std::size_t i = 0; i < m; ++i) {
        r[i] = in[i] + top[i];
        r[m + i] = std::abs(level.d_tilde[i]) * in[i] + half_power * bot[i];
    }
    if (variant == Variant::dvm) {
        for (std::size_t k = 0; k < m; ++k) {
            r[k] *= std::abs(level.d_bar[k]);
            r[m + k] *= std::abs(level.d_bar[k]);
        }
    }

    const std::span<const double> rs(r);
    const std::vector<double> v1 = chain_recurse(plan, s + 1, rs.first(m), variant);
    const std::vector<double> v2 = chain_recurse(plan, s + 1, rs.subspan(m), variant);
    std::vector<double> y(level.level_size);
    for (std::size_t i = 0; i < m; ++i) {
        y[2 * i] = v1[i];
        y[2 * i + 1] = v2[i];
    }
    return y;
}

std::vector<std::complex<double>> round_to_single(std::span<const std::complex<double>> z) {
    std::vector<std::complex<double>> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = {static_cast<double>(static_cast<float>(z[i].real())),
                  static_cast<double>(static_cast<float>(z[i].imag()))};
    }
    return out;
}

double single_vs_double(const FactorizationPlan<float>& single, const FactorizationPlan<double>& dbl,
                        std::span<const std::complex<double>> z, Variant variant) {
    std::vector<std::complex<float>> zf(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        zf[i] = {static_cast<float>(z[i].real()), static_cast<float>(z[i].imag())};
    }
    const std::vector<std::complex<double>> y = fast_multiply(dbl, z, variant);
    const std::vector<std::complex<float>> yf = fast_multiply<float>(single, zf, variant);
    std::vector<std::complex<double>> yhat(yf.size());
    for (std::size_t i = 0; i < yf.size(); ++i) {
        yhat[i] = {yf[i].real(), yf[i].imag()};
    }
    return relative_error(y, yhat);
}

}  // namespace

double BoundParams::gamma(double k) const {
    const double ku = k * u;
    if (!(ku < 1.0)) {
        throw BoundInapplicableError("gamma_k requires k*u < 1");
    }
    return ku / (1.0 - ku);
}

double BoundParams::eta(unsigned t) const {
    const double m = mu();
    return m + gamma(std::ldexp(1.0, static_cast<int>(t))) * (1.0 + m);
}

double BoundParams::prefactor(unsigned t, Variant variant) const {
    const double k = variant == Variant::scaled ? static_cast<double>(t) : 3.0 * t - 2.0;
    const double k_eta = k * eta(t);
    if (!(k_eta < 1.0)) {
        throw BoundInapplicableError("error bound inapplicable: k*eta = " + format_real(k_eta) + " >= 1");
    }
    return k_eta / (1.0 - k_eta);
}

double relative_error(std::span<const std::complex<double>> reference, std::span<const std::complex<double>> approx) {
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        diff += std::norm(reference[i] - approx[i]);
        ref += std::norm(reference[i]);
    }
    if (ref == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::sqrt(diff) / std::sqrt(ref);
}

std::vector<double> absolute_factor_chain(const FactorizationPlan<double>& plan, std::span<const double> x,
                                          Variant variant) {
    if (x.size() != plan.n) {
        throw SizeError("absolute_factor_chain: vector length mismatch");
    }
    return chain_recurse(plan, 0, x, variant);
}

double bound_value(std::size_t n, const Node& node, std::span<const std::complex<double>> z, Variant variant,
                   const BoundParams& params) {
    require_power_of_two(n, 2, "bound");
    if (z.size() != n) {
        throw SizeError("bound: vector length " + std::to_string(z.size()) + " != " + std::to_string(n));
    }
    const FactorizationPlan<double> plan = build_plan<double>(n, node);
    if (plan.degenerate) {
        throw BoundInapplicableError("error bound inapplicable: node is degenerate for size " + std::to_string(n));
    }
    const double pre = params.prefactor(log2_exact(n), variant);

    std::vector<double> abs_z(n);
    for (std::size_t i = 0; i < n; ++i) {
        abs_z[i] = std::abs(z[i]);
    }
    const double rhs = pre * norm2(absolute_factor_chain(plan, abs_z, variant));
    if (rhs == 0.0) {
        return 0.0;
    }
    const double y = norm2(fast_multiply(plan, z, variant));
    return y == 0.0 ? std::numeric_limits<double>::infinity() : rhs / y;
}

double bound_sdvm(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                  const BoundParams& params) {
    return bound_value(n, node, z, Variant::scaled, params);
}

double bound_dvm(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                 const BoundParams& params) {
    return bound_value(n, node, z, Variant::dvm, params);
}

ErrorReport forward_error(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                          Variant variant, const BoundParams& params) {
    require_power_of_two(n, 2, "forward_error");
    if (z.size() != n) {
        throw SizeError("forward_error: vector length " + std::to_string(z.size()) + " != " + std::to_string(n));
    }
    ErrorReport report;
    report.n = n;
    report.node = node;
    report.variant = variant;

    const std::vector<std::complex<double>> input = round_to_single(z);
    const FactorizationPlan<double> dbl = build_plan<double>(n, node);
    const FactorizationPlan<float> single = build_plan<float>(n, node);
    report.degenerate = dbl.degenerate;
    report.measured_error = single_vs_double(single, dbl, input, variant);
    if (!report.degenerate) {
        try {
            report.bound_value = bound_value(n, node, input, variant, params);
        } catch (const BoundInapplicableError&) {
        }
    }
    return report;
}

std::vector<ErrorTableRow> error_table(std::size_t max_n, const Node& node, std::uint64_t seed, bool raw) {
    require_power_of_two(max_n, 4, "error_table");
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ErrorTableRow> rows;
    for (std::size_t n = 4; n <= max_n; n *= 2) {
        ErrorTableRow row;
        row.n = n;
        row.degenerate = node.is_degenerate(n);
        Rng rng = Rng::derived(seed, n);
        const auto z_real = rng.uniform_real_vector(n);
        const auto z_complex = rng.uniform_complex_vector(n);
        if (row.degenerate && !raw) {
            row.err_sdvm_real = row.err_dvm_real = row.err_sdvm_complex = row.err_dvm_complex = nan;
        } else {
            row.err_sdvm_real = forward_error(n, node, z_real, Variant::scaled).measured_error;
            row.err_dvm_real = forward_error(n, node, z_real, Variant::dvm).measured_error;
            row.err_sdvm_complex = forward_error(n, node, z_complex, Variant::scaled).measured_error;
            row.err_dvm_complex = forward_error(n, node, z_complex, Variant::dvm).measured_error;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_error_csv(std::ostream& out, std::span<const ErrorTableRow> rows) {
    out << "N,err_sdvm_real,err_dvm_real,err_sdvm_complex,err_dvm_complex,degenerate\n";
    for (const ErrorTableRow& r : rows) {
        out << r.n << ',' << format_real(r.err_sdvm_real) << ',' << format_real(r.err_dvm_real) << ','
            << format_real(r.err_sdvm_complex) << ',' << format_real(r.err_dvm_complex) << ','
            << (r.degenerate ? 1 : 0) << '\n';
    }
}

}  // namespace fastdvm
