// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "fastdvm/arith.hpp"
#include "fastdvm/companion.hpp"
#include "fastdvm/errors.hpp"
#include "fastdvm/node.hpp"

namespace fastdvm {

template <class Real>
using CompanionPower = DenseMatrix<std::complex<Real>>;

/// Factors of one recursion level of size N_s with node alpha_s = alpha^{2^s}.
///
/// The block factor
///     [ I      C^m            ]
///     [ Dt     alpha_s^m C^m Dt ]
/// (m = N_s/2) is assembled on the fly from `companion_power` and `d_tilde`.
template <class Real>
struct PlanLevel {
    using Complex = std::complex<Real>;

    std::size_t level_size = 0;
    Complex level_node;
    Complex node_half_power;              // alpha_s^m
    CompanionPower<Real> companion_power;  // m x m
    std::vector<Complex> d_tilde;          // alpha_s^l,     l = 0..m-1
    std::vector<Complex> d_bar;            // alpha_s^{-2k}, k = 0..m-1
    std::vector<Complex> d_scale;          // alpha_s^k,     k = 0..N_s-1

    std::size_t half() const noexcept { return level_size / 2; }
};

/// Precomputed level factors for multiplying by the (scaled) DVM of size n.
/// Immutable after construction; multiplies only read it.
template <class Real>
struct FactorizationPlan {
    using Complex = std::complex<Real>;

    std::size_t n = 0;
    Node node = Node::from_angle(0.0);
    Complex alpha;
    std::vector<PlanLevel<Real>> levels;  // s = 0..t-2
    Complex base_node;                     // alpha^{2^{t-1}}, node of the 2x2 base case
    Complex base_node_sq;
    bool degenerate = false;

    std::size_t depth() const noexcept { return levels.size(); }
};

namespace detail {

template <class Real, class Arith>
std::vector<std::complex<Real>> iterated_powers(std::complex<Real> x, std::size_t count, Arith& arith) {
    std::vector<std::complex<Real>> p(count);
    if (count == 0) {
        return p;
    }
    p[0] = std::complex<Real>(1);
    for (std::size_t k = 1; k < count; ++k) {
        p[k] = k == 1 ? x : arith.mul(p[k - 1], x);
    }
    return p;
}

}  // namespace detail

/// Builds all level factors for size n = 2^t (t >= 1) at `node`, entirely in
/// precision Real, with every operation routed through `arith`.
///
/// Powers of each level node are formed by iterated multiplication. Inverse
/// powers alpha_s^{-2k} are conjugates on the unit circle and reciprocals
/// otherwise. Degeneracy is a flag, never an error.
template <class Real, class Arith>
FactorizationPlan<Real> build_plan(std::size_t n, const Node& node, Arith& arith) {
    using Complex = std::complex<Real>;
    require_power_of_two(n, 2, "build_plan");

    FactorizationPlan<Real> plan;
    plan.n = n;
    plan.node = node;
    plan.alpha = node.value_as<Real>();
    plan.degenerate = node.is_degenerate(n);
    const bool unit = node.on_unit_circle();

    Complex level_node = plan.alpha;
    for (std::size_t size = n; size >= 4; size /= 2) {
        PlanLevel<Real> level;
        level.level_size = size;
        level.level_node = level_node;
        const std::size_t m = size / 2;

        std::vector<Complex> powers = detail::iterated_powers(level_node, size, arith);
        level.node_half_power = powers[m];
        level.d_tilde.assign(powers.begin(), powers.begin() + static_cast<std::ptrdiff_t>(m));
        level.d_bar.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            const Complex p = powers[2 * k];
            if (unit) {
                level.d_bar[k] = std::conj(p);
            } else {
                level.d_bar[k] = arith.reciprocal(p);
            }
        }
        PolynomialCoefficients<Real> coeffs = poly_coefficients(size, level_node, arith);
        level.companion_power = companion_power(coeffs, arith);
        level.d_scale = std::move(powers);

        level_node = level.d_scale[2];
        plan.levels.push_back(std::move(level));
    }
    plan.base_node = level_node;
    plan.base_node_sq = arith.mul(level_node, level_node);
    return plan;
}

/// Precision in which the factors of a Real plan are constructed.
template <class Real>
struct ConstructionPrecision {
    using type = long double;
};

/// Rounds every factor of `plan` to precision To.
template <class To, class From>
FactorizationPlan<To> round_plan(const FactorizationPlan<From>& plan) {
    using Complex = std::complex<To>;
    const auto cast = [](const std::complex<From>& x) {
        return Complex(static_cast<To>(x.real()), static_cast<To>(x.imag()));
    };
    const auto cast_all = [&](const std::vector<std::complex<From>>& v) {
        std::vector<Complex> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] = cast(v[i]);
        }
        return out;
    };

    FactorizationPlan<To> out;
    out.n = plan.n;
    out.node = plan.node;
    out.alpha = plan.node.template value_as<To>();
    out.degenerate = plan.degenerate;
    out.base_node = cast(plan.base_node);
    out.base_node_sq = cast(plan.base_node_sq);
    for (const PlanLevel<From>& level : plan.levels) {
        PlanLevel<To> r;
        r.level_size = level.level_size;
        r.level_node = cast(level.level_node);
        r.node_half_power = cast(level.node_half_power);
        const std::size_t m = level.companion_power.rows();
        r.companion_power = CompanionPower<To>(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                r.companion_power(i, j) = cast(level.companion_power(i, j));
            }
        }
        r.d_tilde = cast_all(level.d_tilde);
        r.d_bar = cast_all(level.d_bar);
        r.d_scale = cast_all(level.d_scale);
        out.levels.push_back(std::move(r));
    }
    return out;
}

/// Plan whose factors are the Real roundings of factors built in the wider
/// ConstructionPrecision<Real>, so each stored weight carries a single
/// rounding error. Repeated squaring of the companion matrix in Real itself
/// amplifies the coefficient rounding far beyond that.
template <class Real>
FactorizationPlan<Real> build_plan(std::size_t n, const Node& node) {
    using Wide = typename ConstructionPrecision<Real>::type;
    PlainArith<Wide> arith;
    if constexpr (std::is_same_v<Wide, Real>) {
        return build_plan<Real>(n, node, arith);
    } else {
        return round_plan<Real>(build_plan<Wide>(n, node, arith));
    }
}

}  // namespace fastdvm
