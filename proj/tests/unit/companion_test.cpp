// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fastdvm/companion.hpp"
#include "fastdvm/errors.hpp"
#include "oracles.hpp"
#include "convert.hpp"

namespace fastdvm {
namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(PolyCoefficientsTest, RepeatedRootAtOne) {
    const auto p = poly_coefficients<double>(4, C(1.0));
    ASSERT_EQ(p.degree(), 2u);
    EXPECT_EQ(p.w[0], C(1.0));
    EXPECT_EQ(p.w[1], C(-2.0));
}

TEST(PolyCoefficientsTest, ImaginaryUnitNode) {
    const auto p = poly_coefficients<double>(4, C(0.0, 1.0));
    EXPECT_EQ(p.w[0], C(-1.0));
    EXPECT_EQ(p.w[1], C(0.0));
}

TEST(PolyCoefficientsTest, DegreeOne) {
    const auto p = poly_coefficients<double>(2, std::polar(1.0, 0.3));
    ASSERT_EQ(p.degree(), 1u);
    EXPECT_EQ(p.w[0], C(-1.0));
}

TEST(PolyCoefficientsTest, RejectsInvalidSizes) {
    EXPECT_THROW(poly_coefficients<double>(3, C(1.0)), SizeError);
    EXPECT_THROW(poly_coefficients<double>(0, C(1.0)), SizeError);
    EXPECT_THROW(poly_coefficients<double>(4, C(0.0)), ValueError);
}

class PolyAgainstConvolution : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PolyAgainstConvolution, MatchesNaiveProduct) {
    const std::size_t n = GetParam();
    for (C alpha : {std::polar(1.0, -kPi / 32), std::polar(0.9, 0.7), C(0.3, -1.1)}) {
        oracle::Vector roots;
        for (std::size_t k = 0; k < n / 2; ++k) {
            roots.push_back(oracle::node_power(alpha, static_cast<std::int64_t>(2 * k)));
        }
        const oracle::Vector expected = oracle::poly_from_roots(roots);
        const auto p = poly_coefficients<double>(n, alpha);
        double scale = 0.0;
        for (const C& c : expected) {
            scale = std::max(scale, std::abs(c));
        }
        for (std::size_t i = 0; i < n / 2; ++i) {
            EXPECT_NEAR(std::abs(p.w[i] - expected[i]), 0.0, 1e-13 * scale) << "n=" << n << " i=" << i;
        }
    }
}

TEST_P(PolyAgainstConvolution, NodesAreRoots) {
    const std::size_t n = GetParam();
    const C alpha = std::polar(1.0, -kPi / 32);
    const auto p = poly_coefficients<double>(n, alpha);
    double coeff_sum = 1.0;
    for (const C& w : p.w) {
        coeff_sum += std::abs(w);
    }
    const double tol = coeff_sum * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * 100.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        const C x = oracle::unit_power(kPi / 32, static_cast<std::int64_t>(2 * k));
        C value(1.0);
        for (std::size_t i = 0; i < n / 2; ++i) {
            value *= x;
        }
        C xi(1.0);
        for (const C& w : p.w) {
            value += w * xi;
            xi *= x;
        }
        EXPECT_LE(std::abs(value), tol) << "n=" << n << " k=" << k;
    }
}

INSTANTIATE_TEST_SUITE_P(Sizes, PolyAgainstConvolution, ::testing::Values(2, 4, 8, 16, 32));

TEST(CompanionTest, MatrixLayout) {
    const PolynomialCoefficients<double> p{{C(1.0), C(2.0), C(3.0)}};
    const auto c = companion_matrix(p);
    EXPECT_EQ(c(1, 0), C(1.0));
    EXPECT_EQ(c(2, 1), C(1.0));
    EXPECT_EQ(c(0, 0), C(0.0));
    EXPECT_EQ(c(0, 2), C(-1.0));
    EXPECT_EQ(c(1, 2), C(-2.0));
    EXPECT_EQ(c(2, 2), C(-3.0));
}

TEST(CompanionTest, OneByOne) {
    const auto p = poly_coefficients<double>(2, std::polar(1.0, 1.0));
    const auto c = companion_power(p);
    ASSERT_EQ(c.rows(), 1u);
    EXPECT_EQ(c(0, 0), C(1.0));
}

TEST(CompanionTest, SwapSquaresToIdentity) {
    const auto p = poly_coefficients<double>(4, C(0.0, 1.0));
    const auto c = companion_matrix(p);
    EXPECT_EQ(c(0, 1), C(1.0));
    EXPECT_EQ(c(1, 0), C(1.0));
    EXPECT_EQ(companion_power(p), (DenseMatrix<C>::identity(2)));
}

TEST(CompanionTest, PowerMatchesRepeatedProduct) {
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto p = poly_coefficients<double>(n, std::polar(1.0, -kPi / 32));
        const oracle::Matrix c = testing_support::to_oracle(companion_matrix(p));
        const oracle::Matrix expected = oracle::naive_power(c, n / 2);
        const oracle::Matrix got = testing_support::to_oracle(companion_power(p));
        double scale = 0.0;
        for (const auto& row : expected) {
            for (const C& v : row) {
                scale = std::max(scale, std::abs(v));
            }
        }
        EXPECT_LE(oracle::max_abs_diff(expected, got), 1e-12 * scale) << n;
    }
}

TEST(CompanionTest, RejectsNonPowerOfTwoDegree) {
    const PolynomialCoefficients<double> p{{C(1.0), C(2.0), C(3.0)}};
    EXPECT_THROW(companion_power(p), SizeError);
}

TEST(CompanionTest, ShiftRelationOnVandermonde) {
    // V C = diag(x_k) V where V = [x_k^l] over the roots x_k of p.
    for (std::size_t n : {4u, 8u, 16u}) {
        const double theta = kPi / 32;
        const std::size_t m = n / 2;
        const auto p = poly_coefficients<double>(n, std::polar(1.0, -theta));
        const oracle::Matrix v = oracle::vandermonde(m, 2.0 * theta, 0);
        const oracle::Matrix lhs = oracle::multiply(v, testing_support::to_oracle(companion_matrix(p)));
        oracle::Matrix rhs = v;
        for (std::size_t k = 0; k < m; ++k) {
            for (auto& x : rhs[k]) {
                x *= oracle::unit_power(2.0 * theta, static_cast<std::int64_t>(k));
            }
        }
        EXPECT_LE(oracle::max_abs_diff(lhs, rhs), 1e-12) << n;

        const auto pw = poly_coefficients<long double>(n, std::polar(1.0L, -static_cast<long double>(theta)));
        const auto cm = companion_power(pw);
        oracle::wide::Matrix cm_dense(m, oracle::wide::Vector(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                cm_dense[i][j] = cm(i, j);
            }
        }
        const oracle::wide::Matrix vw = oracle::wide::vandermonde(m, 2.0L * theta, 0);
        const oracle::wide::Matrix lhs_m = oracle::wide::multiply(vw, cm_dense);
        oracle::wide::Matrix rhs_m = vw;
        for (std::size_t k = 0; k < m; ++k) {
            for (auto& x : rhs_m[k]) {
                x *= oracle::wide::unit_power(2.0L * theta, static_cast<std::int64_t>(k * m));
            }
        }
        EXPECT_LE(oracle::wide::max_abs_diff(lhs_m, rhs_m), 1e-12L) << n;
    }
}

}  // namespace
}  // namespace fastdvm
