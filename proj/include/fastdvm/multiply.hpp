// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "fastdvm/arith.hpp"
#include "fastdvm/errors.hpp"
#include "fastdvm/plan.hpp"

namespace fastdvm {

enum class Variant { scaled, dvm };

inline const char* to_string(Variant v) noexcept { return v == Variant::scaled ? "sdvm" : "dvm"; }

/// Even-odd permutation: out = (x_0, x_2, ..., x_1, x_3, ...).
template <class T>
std::vector<T> even_odd_permute(std::span<const T> x) {
    const std::size_t half = x.size() / 2;
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = x[2 * i];
        out[half + i] = x[2 * i + 1];
    }
    return out;
}

/// Inverse of even_odd_permute: slot i goes to index 2i, slot half+i to 2i+1.
template <class T>
std::vector<T> even_odd_unpermute(std::span<const T> x) {
    const std::size_t half = x.size() / 2;
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < half; ++i) {
        out[2 * i] = x[i];
        out[2 * i + 1] = x[half + i];
    }
    return out;
}

namespace detail {

template <class Real, class Arith>
void dense_apply(const CompanionPower<Real>& c, std::span<const std::complex<Real>> x,
                 std::span<std::complex<Real>> out, Arith& arith) {
    const std::size_t m = c.rows();
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<Real> acc = arith.scale(c(i, 0), x[0]);
        for (std::size_t j = 1; j < m; ++j) {
            acc = arith.add(acc, arith.scale(c(i, j), x[j]));
        }
        out[i] = acc;
    }
}

template <class T>
void check_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw SizeError(std::string(what) + ": vector length " + std::to_string(got) + " != " +
                        std::to_string(want));
    }
}

}  // namespace detail

/// u = Ct * z for one level:
///     u_top = z_top + C^m z_bot
///     u_bot = Dt z_top + alpha_s^m C^m (Dt z_bot)
template <class Real, class Arith>
std::vector<std::complex<Real>> apply_ctilde(const PlanLevel<Real>& level,
                                             std::span<const std::complex<Real>> z, Arith& arith) {
    using Complex = std::complex<Real>;
    detail::check_size<Complex>(z.size(), level.level_size, "apply_ctilde");
    const std::size_t m = level.half();
    const auto z_top = z.first(m);
    const auto z_bot = z.subspan(m);

    std::vector<Complex> u(level.level_size);
    std::vector<Complex> tmp(m);
    detail::dense_apply<Real>(level.companion_power, z_bot, tmp, arith);
    for (std::size_t i = 0; i < m; ++i) {
        u[i] = arith.add(z_top[i], tmp[i]);
    }

    std::vector<Complex> scaled_bot(m);
    for (std::size_t i = 0; i < m; ++i) {
        scaled_bot[i] = arith.scale(level.d_tilde[i], z_bot[i]);
    }
    detail::dense_apply<Real>(level.companion_power, scaled_bot, tmp, arith);
    for (std::size_t i = 0; i < m; ++i) {
        u[m + i] = arith.add(arith.scale(level.d_tilde[i], z_top[i]),
                             arith.scale(level.node_half_power, tmp[i]));
    }
    return u;
}

template <class Real>
std::vector<std::complex<Real>> apply_ctilde(const PlanLevel<Real>& level,
                                             std::span<const std::complex<Real>> z) {
    PlainArith<Real> arith;
    return apply_ctilde(level, z, arith);
}

namespace detail {

template <class Real, class Arith>
std::vector<std::complex<Real>> fast_recurse(const FactorizationPlan<Real>& plan, std::size_t s,
                                             std::span<const std::complex<Real>> z, Variant variant,
                                             Arith& arith) {
    using Complex = std::complex<Real>;
    if (s == plan.levels.size()) {
        const Complex b = plan.base_node;
        if (variant == Variant::scaled) {
            return {arith.add(z[0], z[1]), arith.add(z[0], arith.scale(b, z[1]))};
        }
        return {arith.add(z[0], arith.scale(b, z[1])),
                arith.add(z[0], arith.scale(plan.base_node_sq, z[1]))};
    }

    const PlanLevel<Real>& level = plan.levels[s];
    const std::size_t m = level.half();
    std::vector<Complex> r;
    if (variant == Variant::scaled) {
        r = apply_ctilde(level, z, arith);
    } else {
        std::vector<Complex> u(z.size());
        for (std::size_t k = 0; k < z.size(); ++k) {
            u[k] = arith.scale(level.d_scale[k], z[k]);
        }
        r = apply_ctilde<Real>(level, u, arith);
        for (std::size_t k = 0; k < m; ++k) {
            r[k] = arith.scale(level.d_bar[k], r[k]);
            r[m + k] = arith.scale(level.d_bar[k], r[m + k]);
        }
    }

    const std::span<const Complex> rs(r);
    std::vector<Complex> v1 = fast_recurse(plan, s + 1, rs.first(m), variant, arith);
    std::vector<Complex> v2 = fast_recurse(plan, s + 1, rs.subspan(m), variant, arith);
    std::vector<Complex> y(z.size());
    for (std::size_t i = 0; i < m; ++i) {
        y[2 * i] = v1[i];
        y[2 * i + 1] = v2[i];
    }
    return y;
}

}  // namespace detail

/// y = At z with At = [alpha^{kl}], k, l = 0..N-1.
template <class Real, class Arith>
std::vector<std::complex<Real>> sdvm_multiply(const FactorizationPlan<Real>& plan,
                                              std::span<const std::complex<Real>> z, Arith& arith) {
    detail::check_size<std::complex<Real>>(z.size(), plan.n, "sdvm_multiply");
    return detail::fast_recurse(plan, 0, z, Variant::scaled, arith);
}

template <class Real>
std::vector<std::complex<Real>> sdvm_multiply(const FactorizationPlan<Real>& plan,
                                              std::span<const std::complex<Real>> z) {
    PlainArith<Real> arith;
    return sdvm_multiply(plan, z, arith);
}

/// y = A z with A = [alpha^{kl}], k = 1..N, l = 0..N-1.
template <class Real, class Arith>
std::vector<std::complex<Real>> dvm_multiply(const FactorizationPlan<Real>& plan,
                                             std::span<const std::complex<Real>> z, Arith& arith) {
    detail::check_size<std::complex<Real>>(z.size(), plan.n, "dvm_multiply");
    return detail::fast_recurse(plan, 0, z, Variant::dvm, arith);
}

template <class Real>
std::vector<std::complex<Real>> dvm_multiply(const FactorizationPlan<Real>& plan,
                                             std::span<const std::complex<Real>> z) {
    PlainArith<Real> arith;
    return dvm_multiply(plan, z, arith);
}

template <class Real>
std::vector<std::complex<Real>> fast_multiply(const FactorizationPlan<Real>& plan,
                                              std::span<const std::complex<Real>> z, Variant variant) {
    return variant == Variant::scaled ? sdvm_multiply(plan, z) : dvm_multiply(plan, z);
}

/// Product together with the plan's degeneracy flag.
template <class Real>
struct CheckedProduct {
    std::vector<std::complex<Real>> y;
    bool degenerate = false;
    std::string warning;
};

template <class Real>
CheckedProduct<Real> multiply_checked(const FactorizationPlan<Real>& plan,
                                      std::span<const std::complex<Real>> z, Variant variant) {
    CheckedProduct<Real> out{fast_multiply(plan, z, variant), plan.degenerate, {}};
    if (plan.degenerate) {
        out.warning = "node is degenerate for size " + std::to_string(plan.n) +
                      ": alpha^d == 1 for some d < n, the matrix nodes repeat and the matrix is singular";
    }
    return out;
}

/// Materialized entry alpha^{kl} of the scaled (row offset 0) or unscaled
/// (row offset 1) matrix, by iterated multiplication.
template <class Real>
DenseMatrix<std::complex<Real>> materialize(std::size_t n, std::complex<Real> alpha, Variant variant) {
    using Complex = std::complex<Real>;
    DenseMatrix<Complex> a(n, n);
    const std::size_t offset = variant == Variant::scaled ? 0 : 1;
    Complex generator(1);
    for (std::size_t k = 0; k < offset; ++k) {
        generator *= alpha;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Complex entry(1);
        for (std::size_t l = 0; l < n; ++l) {
            a(k, l) = entry;
            entry *= generator;
        }
        generator *= alpha;
    }
    return a;
}

/// Brute-force oracle: dense product with the materialized matrix. Any n >= 1.
///
/// Under counting, a row whose generator alpha^k is trivial (always the k = 0
/// row of the scaled matrix) costs no multiplications; every entry product of
/// any other row is counted.
template <class Real, class Arith>
std::vector<std::complex<Real>> direct_multiply(std::size_t n, std::complex<Real> alpha,
                                                std::span<const std::complex<Real>> z, Variant variant,
                                                Arith& arith) {
    using Complex = std::complex<Real>;
    if (n < 1) {
        throw SizeError("direct_multiply: size must be >= 1");
    }
    detail::check_size<Complex>(z.size(), n, "direct_multiply");
    const DenseMatrix<Complex> a = materialize(n, alpha, variant);
    std::vector<Complex> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex generator = n > 1 ? a(k, 1) : (variant == Variant::scaled ? Complex(1) : alpha);
        const bool trivial_row = is_trivial_multiplicand(generator);
        auto term = [&](std::size_t l) {
            return trivial_row ? arith.scale(a(k, l), z[l]) : arith.dense(a(k, l), z[l]);
        };
        Complex acc = term(0);
        for (std::size_t l = 1; l < n; ++l) {
            acc = arith.add(acc, term(l));
        }
        y[k] = acc;
    }
    return y;
}

template <class Real>
std::vector<std::complex<Real>> direct_multiply(std::size_t n, std::complex<Real> alpha,
                                                std::span<const std::complex<Real>> z, Variant variant) {
    PlainArith<Real> arith;
    return direct_multiply(n, alpha, z, variant, arith);
}

}  // namespace fastdvm
