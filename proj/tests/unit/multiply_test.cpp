// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fastdvm/multiply.hpp"
#include "fastdvm/plan.hpp"
#include "fastdvm/random.hpp"
#include "convert.hpp"
#include "oracles.hpp"

namespace fastdvm {
namespace {

using C = std::complex<double>;
using testing_support::to_oracle;
using testing_support::view;
constexpr double kPi = std::numbers::pi;

// Dense block factor [[I, C^m], [Dt, alpha^m C^m Dt]] of one level.
oracle::Matrix dense_ctilde(const PlanLevel<double>& level) {
    const std::size_t m = level.half();
    const oracle::Matrix c = to_oracle(level.companion_power);
    oracle::Matrix out(2 * m, oracle::Vector(2 * m));
    for (std::size_t i = 0; i < m; ++i) {
        out[i][i] = 1.0;
        out[m + i][i] = level.d_tilde[i];
        for (std::size_t j = 0; j < m; ++j) {
            out[i][m + j] = c[i][j];
            out[m + i][m + j] = level.node_half_power * c[i][j] * level.d_tilde[j];
        }
    }
    return out;
}

TEST(PlanTest, LevelInvariants) {
    const auto plan = build_plan<double>(8, Node::from_angle(kPi / 32));
    ASSERT_EQ(plan.depth(), 2u);
    EXPECT_FALSE(plan.degenerate);
    EXPECT_EQ(plan.levels[0].level_size, 8u);
    EXPECT_EQ(plan.levels[1].level_size, 4u);
    EXPECT_EQ(plan.levels[0].companion_power.rows(), 4u);
    EXPECT_EQ(plan.levels[1].companion_power.rows(), 2u);
    EXPECT_NEAR(std::abs(plan.levels[0].level_node - oracle::unit_power(kPi / 32, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plan.levels[1].level_node - oracle::unit_power(kPi / 32, 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plan.base_node - oracle::unit_power(kPi / 32, 4)), 0.0, 1e-15);
    for (std::size_t s = 0; s + 1 < plan.depth(); ++s) {
        const C sq = plan.levels[s].level_node * plan.levels[s].level_node;
        EXPECT_NEAR(std::abs(plan.levels[s + 1].level_node - sq), 0.0, 1e-15);
    }
    const auto& top = plan.levels[0];
    ASSERT_EQ(top.d_tilde.size(), 4u);
    ASSERT_EQ(top.d_bar.size(), 4u);
    ASSERT_EQ(top.d_scale.size(), 8u);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(top.d_tilde[k] - oracle::unit_power(kPi / 32, k)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(top.d_bar[k] - oracle::unit_power(kPi / 32, -2 * static_cast<int>(k))), 0.0, 1e-15);
    }
}

TEST(PlanTest, BaseCaseHasNoLevels) {
    const auto plan = build_plan<double>(2, Node::from_angle(0.4));
    EXPECT_EQ(plan.depth(), 0u);
    EXPECT_FALSE(plan.degenerate);
    EXPECT_THROW(build_plan<double>(1, Node::from_angle(0.4)), SizeError);
    EXPECT_THROW(build_plan<double>(12, Node::from_angle(0.4)), SizeError);
}

TEST(PlanTest, DegenerateIsFlagNotError) {
    const auto plan = build_plan<double>(128, Node::from_angle(kPi / 32));
    EXPECT_TRUE(plan.degenerate);
    EXPECT_EQ(plan.depth(), 6u);
}

TEST(PlanTest, OffCircleInverseDiagonal) {
    const C alpha(0.6, 0.5);
    const auto plan = build_plan<double>(8, Node::from_value(alpha));
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(plan.levels[0].d_bar[k] * oracle::node_power(alpha, 2 * static_cast<int>(k)) - 1.0), 0.0,
                    1e-13);
    }
}

TEST(PlanTest, SinglePlanIsRoundedWidePlan) {
    const auto wide = build_plan<double>(32, Node::from_angle(kPi / 32));
    const auto single = build_plan<float>(32, Node::from_angle(kPi / 32));
    for (std::size_t s = 0; s < wide.depth(); ++s) {
        const auto& a = wide.levels[s].companion_power;
        const auto& b = single.levels[s].companion_power;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                EXPECT_LE(std::abs(C(b(i, j)) - a(i, j)), 1e-6 * std::abs(a(i, j)) + 1e-30);
            }
        }
    }
}

TEST(PermutationTest, UnpermuteInvertsPermute) {
    Rng rng(3);
    const auto x = rng.unit_vector(16);
    const auto p = even_odd_permute<C>(view(x));
    EXPECT_EQ(p[0], x[0]);
    EXPECT_EQ(p[1], x[2]);
    EXPECT_EQ(p[8], x[1]);
    EXPECT_EQ(even_odd_unpermute<C>(p), x);
}

TEST(ApplyCtildeTest, ZeroMapsToZero) {
    const auto plan = build_plan<double>(8, Node::from_angle(kPi / 32));
    const std::vector<C> z(8);
    for (const C& v : apply_ctilde(plan.levels[0], view(z))) {
        EXPECT_EQ(v, C(0.0));
    }
}

TEST(ApplyCtildeTest, ImaginaryUnitNode) {
    const auto plan = build_plan<double>(4, Node::from_value(C(0.0, 1.0)));
    const std::vector<C> z{C(1, 2), C(-3, 0.5), C(0.25, 4), C(2, -1)};
    const auto u = apply_ctilde(plan.levels[0], view(z));
    const C i(0.0, 1.0);
    const std::vector<C> expected{z[0] + z[2], z[1] + z[3], z[0] - z[2], i * z[1] - i * z[3]};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(u[k] - expected[k]), 0.0, 1e-15) << k;
    }
}

TEST(ApplyCtildeTest, MatchesDenseBlockFactor) {
    Rng rng(11);
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto plan = build_plan<double>(n, Node::from_angle(kPi / 32));
        const auto z = rng.unit_vector(n);
        const auto u = apply_ctilde(plan.levels[0], view(z));
        const auto expected = oracle::apply(dense_ctilde(plan.levels[0]), to_oracle(z));
        EXPECT_LE(oracle::rel_error(expected, to_oracle(u)), 1e-13) << n;
    }
    const auto plan = build_plan<double>(8, Node::from_angle(0.1));
    EXPECT_THROW(apply_ctilde(plan.levels[0], view(std::vector<C>(4))), SizeError);
}

TEST(FactorizationTest, DenseReconstructionOfScaledMatrix) {
    for (double theta : {kPi / 32, 0.37, 1.9}) {
        for (std::size_t n : {4u, 8u, 16u}) {
            const auto plan = build_plan<long double>(n, Node::from_angle(theta));
            const auto rebuilt = testing_support::rebuild_from_level(testing_support::dense_ctilde_wide(plan.levels[0]), theta);
            EXPECT_LE(oracle::wide::max_abs_diff(rebuilt, oracle::wide::vandermonde(n, theta, 0)), 1e-12L)
                << "theta=" << theta << " n=" << n;
        }
    }
}

TEST(MaterializeTest, MatchesAngleEntries) {
    const C alpha = std::polar(1.0, -0.3);
    EXPECT_LE(oracle::max_abs_diff(to_oracle(materialize(8, alpha, Variant::scaled)), oracle::vandermonde(8, 0.3, 0)),
              1e-14);
    EXPECT_LE(oracle::max_abs_diff(to_oracle(materialize(8, alpha, Variant::dvm)), oracle::vandermonde(8, 0.3, 1)),
              1e-14);
}

TEST(DirectMultiplyTest, SizeOneAndValidation) {
    const C alpha(0.5, 0.5);
    const std::vector<C> z{C(2.0, 1.0)};
    EXPECT_EQ(direct_multiply<double>(1, alpha, view(z), Variant::scaled)[0], z[0]);
    EXPECT_EQ(direct_multiply<double>(1, alpha, view(z), Variant::dvm)[0], z[0]);
    EXPECT_THROW(direct_multiply<double>(2, alpha, view(z), Variant::dvm), SizeError);
}

TEST(FastMultiplyTest, BaseCases) {
    const std::vector<C> z{C(1.0), C(1.0)};
    const auto plan = build_plan<double>(2, Node::from_angle(0.0));
    const auto y = sdvm_multiply(plan, view(z));
    EXPECT_EQ(y[0], C(2.0));
    EXPECT_EQ(y[1], C(2.0));

    const C alpha = std::polar(1.0, -0.7);
    const auto p2 = build_plan<double>(2, Node::from_value(alpha));
    const std::vector<C> w{C(1.0, 2.0), C(-0.5, 0.25)};
    const auto d = dvm_multiply(p2, view(w));
    EXPECT_NEAR(std::abs(d[0] - (w[0] + alpha * w[1])), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[1] - (w[0] + alpha * alpha * w[1])), 0.0, 1e-15);
}

TEST(FastMultiplyTest, ZeroInput) {
    const auto plan = build_plan<double>(16, Node::from_angle(kPi / 32));
    const std::vector<C> z(16);
    for (const C& v : dvm_multiply(plan, view(z))) {
        EXPECT_EQ(v, C(0.0));
    }
    EXPECT_THROW(sdvm_multiply(plan, view(std::vector<C>(8))), SizeError);
}

// Angles near 2 pi / n spread the roots of every level around the circle.
TEST(FastMultiplyTest, MatchesAngleOracle) {
    Rng rng(21);
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const double theta = rng.uniform(0.95, 1.0) * 2.0 * kPi / static_cast<double>(n);
            const auto plan = build_plan<double>(n, Node::from_angle(theta));
            const auto z = rng.unit_vector(n);
            const auto ys = sdvm_multiply(plan, view(z));
            const auto yd = dvm_multiply(plan, view(z));
            EXPECT_LE(oracle::rel_error(oracle::apply(oracle::vandermonde(n, theta, 0), to_oracle(z)), to_oracle(ys)),
                      1e-9)
                << "n=" << n << " theta=" << theta;
            EXPECT_LE(oracle::rel_error(oracle::apply(oracle::vandermonde(n, theta, 1), to_oracle(z)), to_oracle(yd)),
                      1e-9)
                << "n=" << n << " theta=" << theta;
        }
    }
}

TEST(FastMultiplyTest, GeneralComplexNode) {
    Rng rng(5);
    const C alpha(0.8, -0.45);
    for (std::size_t n : {4u, 8u}) {
        const auto plan = build_plan<double>(n, Node::from_value(alpha));
        const auto z = rng.unit_vector(n);
        const auto ys = sdvm_multiply(plan, view(z));
        const auto yd = dvm_multiply(plan, view(z));
        EXPECT_LE(oracle::rel_error(oracle::apply(oracle::vandermonde(n, alpha, 0), to_oracle(z)), to_oracle(ys)), 1e-11);
        EXPECT_LE(oracle::rel_error(oracle::apply(oracle::vandermonde(n, alpha, 1), to_oracle(z)), to_oracle(yd)), 1e-11);
    }
}

TEST(FastMultiplyTest, DftSpecialization) {
    Rng rng(8);
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
        const auto plan = build_plan<double>(n, Node::from_angle(2.0 * kPi / static_cast<double>(n)));
        const auto z = rng.unit_vector(n);
        EXPECT_LE(oracle::rel_error(oracle::dft(to_oracle(z)), to_oracle(sdvm_multiply(plan, view(z)))), 1e-11) << n;
    }
}

TEST(FastMultiplyTest, ScalingRelation) {
    Rng rng(9);
    for (std::size_t n : {4u, 16u, 64u}) {
        const double theta = 2.0 * kPi / static_cast<double>(n) + 0.01;
        const auto plan = build_plan<double>(n, Node::from_angle(theta));
        const auto z = rng.unit_vector(n);
        std::vector<C> scaled(n);
        for (std::size_t k = 0; k < n; ++k) {
            scaled[k] = plan.levels.empty() ? z[k] : plan.levels[0].d_scale[k] * z[k];
        }
        const auto a = dvm_multiply(plan, view(z));
        const auto b = sdvm_multiply(plan, view(scaled));
        EXPECT_LE(oracle::rel_error(to_oracle(b), to_oracle(a)), 1e-13) << n;
    }
}

TEST(FastMultiplyTest, Linearity) {
    Rng rng(10);
    for (std::size_t n : {4u, 8u, 16u, 32u}) {
        const double theta = 2.0 * kPi / static_cast<double>(n) + 0.05;
        const auto plan = build_plan<double>(n, Node::from_angle(theta));
        const auto z1 = rng.unit_vector(n);
        const auto z2 = rng.unit_vector(n);
        const C a(0.3, -1.2);
        const C b(-0.7, 0.4);
        std::vector<C> mix(n);
        for (std::size_t k = 0; k < n; ++k) {
            mix[k] = a * z1[k] + b * z2[k];
        }
        for (Variant v : {Variant::scaled, Variant::dvm}) {
            const auto y1 = fast_multiply(plan, view(z1), v);
            const auto y2 = fast_multiply(plan, view(z2), v);
            std::vector<C> expected(n);
            for (std::size_t k = 0; k < n; ++k) {
                expected[k] = a * y1[k] + b * y2[k];
            }
            EXPECT_LE(oracle::rel_error(to_oracle(expected), to_oracle(fast_multiply(plan, view(mix), v))), 1e-12);
        }
    }
}

TEST(FastMultiplyTest, SinglePrecisionSmallSize) {
    Rng rng(12);
    const auto plan = build_plan<float>(4, Node::from_angle(kPi / 32));
    const auto z = rng.unit_vector(4);
    std::vector<std::complex<float>> zf;
    for (const C& v : z) {
        zf.emplace_back(static_cast<float>(v.real()), static_cast<float>(v.imag()));
    }
    const auto y = sdvm_multiply(plan, std::span<const std::complex<float>>(zf));
    EXPECT_LE(oracle::rel_error(oracle::apply(oracle::vandermonde(4, kPi / 32, 0), to_oracle(z)), to_oracle(y)), 1e-6);
}

TEST(CheckedMultiplyTest, DegenerateWarns) {
    const auto plan = build_plan<double>(128, Node::from_angle(kPi / 32));
    const std::vector<C> z(128, C(1.0));
    const auto r = multiply_checked(plan, view(z), Variant::scaled);
    EXPECT_TRUE(r.degenerate);
    EXPECT_FALSE(r.warning.empty());
    EXPECT_EQ(r.y.size(), 128u);

    const auto ok = build_plan<double>(64, Node::from_angle(kPi / 32));
    const auto r2 = multiply_checked(ok, view(std::vector<C>(64, C(1.0))), Variant::dvm);
    EXPECT_FALSE(r2.degenerate);
    EXPECT_TRUE(r2.warning.empty());
}

}  // namespace
}  // namespace fastdvm
