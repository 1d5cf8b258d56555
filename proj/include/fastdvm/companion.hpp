// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "fastdvm/arith.hpp"
#include "fastdvm/dense.hpp"
#include "fastdvm/errors.hpp"

namespace fastdvm {

/// Non-leading coefficients w_0..w_{m-1} of the monic polynomial
/// p(z) = z^m + sum_i w_i z^i.
template <class Real>
struct PolynomialCoefficients {
    std::vector<std::complex<Real>> w;

    std::size_t degree() const noexcept { return w.size(); }
};

/// Coefficients of p(z) = (z - 1)(z - alpha^2)(z - alpha^4)...(z - alpha^{n-2}).
///
/// Runs the shift-and-subtract recurrence w <- (S - beta_k I) w over length-n/2
/// vectors, starting from w = (1, 0, ..., 0), with beta_k = alpha^{2(k-1)}
/// for k = 1..n/2. S is the truncating lower shift; the coefficient shifted out
/// on the final step is the implicit monic 1. The betas are formed by iterated
/// multiplication.
template <class Real, class Arith>
PolynomialCoefficients<Real> poly_coefficients(std::size_t n, std::complex<Real> alpha, Arith& arith) {
    using Complex = std::complex<Real>;
    if (n < 2 || n % 2 != 0) {
        throw SizeError("poly_coefficients: size " + std::to_string(n) + " must be even and >= 2");
    }
    if (alpha == Complex(0)) {
        throw ValueError("poly_coefficients: node must be nonzero");
    }
    const std::size_t m = n / 2;
    const Complex alpha_sq = arith.mul(alpha, alpha);

    std::vector<Complex> w(m, Complex(0));
    w[0] = Complex(1);
    std::vector<Complex> next(m);
    Complex beta(1);
    for (std::size_t k = 1; k <= m; ++k) {
        if (k > 1) {
            beta = arith.mul(beta, alpha_sq);
        }
        next[0] = -arith.scale(beta, w[0]);
        for (std::size_t i = 1; i < m; ++i) {
            next[i] = arith.sub(w[i - 1], arith.scale(beta, w[i]));
        }
        w.swap(next);
    }
    return {std::move(w)};
}

template <class Real>
PolynomialCoefficients<Real> poly_coefficients(std::size_t n, std::complex<Real> alpha) {
    PlainArith<Real> arith;
    return poly_coefficients(n, alpha, arith);
}

/// Companion matrix of p: ones on the subdiagonal, -w in the last column.
template <class Real>
DenseMatrix<std::complex<Real>> companion_matrix(const PolynomialCoefficients<Real>& coeffs) {
    const std::size_t m = coeffs.degree();
    DenseMatrix<std::complex<Real>> c(m, m);
    for (std::size_t i = 1; i < m; ++i) {
        c(i, i - 1) = std::complex<Real>(1);
    }
    for (std::size_t i = 0; i < m; ++i) {
        c(i, m - 1) = -coeffs.w[i];
    }
    return c;
}

/// C^m for the m x m companion matrix C of p, by repeated squaring.
template <class Real, class Arith>
DenseMatrix<std::complex<Real>> companion_power(const PolynomialCoefficients<Real>& coeffs, Arith& arith) {
    using Complex = std::complex<Real>;
    const std::size_t m = coeffs.degree();
    require_power_of_two(m, 1, "companion_power");

    DenseMatrix<Complex> power = companion_matrix(coeffs);
    for (std::size_t e = 1; e < m; e *= 2) {
        DenseMatrix<Complex> sq(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                Complex acc = arith.mul(power(i, 0), power(0, j));
                for (std::size_t k = 1; k < m; ++k) {
                    acc = arith.add(acc, arith.mul(power(i, k), power(k, j)));
                }
                sq(i, j) = acc;
            }
        }
        power = std::move(sq);
    }
    return power;
}

template <class Real>
DenseMatrix<std::complex<Real>> companion_power(const PolynomialCoefficients<Real>& coeffs) {
    PlainArith<Real> arith;
    return companion_power(coeffs, arith);
}

}  // namespace fastdvm
