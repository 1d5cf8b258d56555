// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "fastdvm/multiply.hpp"
#include "fastdvm/node.hpp"

namespace fastdvm {

/// Unit roundoff u = eps/2 of a floating-point format.
template <class Real>
constexpr double unit_roundoff() noexcept {
    return static_cast<double>(std::numeric_limits<Real>::epsilon()) / 2.0;
}

/// Rounding model parameters. Computed weights satisfy |alpha^k_hat - alpha^k| <= mu = c*u.
struct BoundParams {
    double u = unit_roundoff<float>();
    double c = 1.0;

    double mu() const noexcept { return c * u; }

    /// gamma_k = k u / (1 - k u); throws BoundInapplicableError unless k u < 1.
    double gamma(double k) const;

    /// eta = mu + gamma_{2^t} (1 + mu).
    double eta(unsigned t) const;

    /// k eta / (1 - k eta) with k = t (scaled) or 3t - 2 (dvm).
    double prefactor(unsigned t, Variant variant) const;
};

/// Single-vs-double forward error of one configuration.
struct ErrorReport {
    std::size_t n = 0;
    Node node = Node::from_angle(0.0);
    Variant variant = Variant::scaled;
    double measured_error = 0.0;  // ||y - y_hat||_2 / ||y||_2, NaN when not computed
    double bound_value = std::numeric_limits<double>::quiet_NaN();  // NaN when inapplicable
    bool degenerate = false;
};

/// Runs the fast algorithm in single and in double precision on the same
/// (float-representable) input and reports e = ||y_double - y_single|| / ||y_double||.
/// The theoretical bound is attached when it applies (non-degenerate, k eta < 1).
ErrorReport forward_error(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                          Variant variant, const BoundParams& params = {});

/// Relative bound ||RHS||_2 / ||y||_2 where RHS is the entrywise bound on
/// |y - y_hat| for the scaled algorithm: prefactor t*eta/(1 - t*eta) times the
/// chain of entrywise-absolute factor matrices applied to |z|.
double bound_sdvm(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                  const BoundParams& params);

/// As bound_sdvm for the unscaled algorithm, prefactor (3t-2)eta/(1 - (3t-2)eta).
double bound_dvm(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                 const BoundParams& params);

double bound_value(std::size_t n, const Node& node, std::span<const std::complex<double>> z,
                   Variant variant, const BoundParams& params);

/// Entrywise chain |P(0)|...|A(t-1)|...|z| without the prefactor; exposed for tests.
std::vector<double> absolute_factor_chain(const FactorizationPlan<double>& plan, std::span<const double> x,
                                          Variant variant);

struct ErrorTableRow {
    std::size_t n = 0;
    double err_sdvm_real = 0.0;
    double err_dvm_real = 0.0;
    double err_sdvm_complex = 0.0;
    double err_dvm_complex = 0.0;
    bool degenerate = false;
};

/// Rows n = 4..max_n. Inputs are uniform on (0,1) (real) and on (0,1)+i(0,1)
/// (complex), drawn from a stream derived from (seed, n). Degenerate rows are
/// computed only when `raw` is set; otherwise their errors are NaN.
std::vector<ErrorTableRow> error_table(std::size_t max_n, const Node& node, std::uint64_t seed, bool raw);

/// CSV with header `N,err_sdvm_real,err_dvm_real,err_sdvm_complex,err_dvm_complex,degenerate`.
void write_error_csv(std::ostream& out, std::span<const ErrorTableRow> rows);

double relative_error(std::span<const std::complex<double>> reference, std::span<const std::complex<double>> approx);

}  // namespace fastdvm
