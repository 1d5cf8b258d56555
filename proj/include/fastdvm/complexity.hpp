// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fastdvm/arith.hpp"
#include "fastdvm/multiply.hpp"
#include "fastdvm/plan.hpp"

namespace fastdvm {

// Closed-form operation counts. Counts are complex additions and complex
// multiplications; multiplications by +-1, +-i and permutations are free.

/// Scaled DVM: #a = (Nt + 4^t - N)/2, #m = 3Nt/2 + 4^t/2 - 2N, for n = 2^t, t >= 1.
OpCount sdvm_counts_formula(std::uint64_t n);

/// DVM: #a = (Nt + 4^t - N)/2, #m = 7Nt/2 + 4^t/2 - 7N/2, for n = 2^t, t >= 1.
OpCount dvm_counts_formula(std::uint64_t n);

/// Dense product: scaled N(N-1) adds and mults; dvm N(N-1) adds and N^2 mults.
OpCount direct_counts(std::uint64_t n, Variant variant);

OpCount formula_counts(std::uint64_t n, Variant variant);

enum class Algorithm { sdvm, dvm, direct_scaled, direct_dvm };

/// Instrumented counts of one multiply, with plan construction tallied apart.
struct MeasuredCounts {
    OpCount apply;
    OpCount construction;
};

/// Runs `algorithm` on z with a counting arithmetic. For the fast algorithms
/// the plan's factors are rebuilt under counting to obtain `construction`;
/// the direct algorithms have no construction cost.
MeasuredCounts measure_counts(const FactorizationPlan<double>& plan, std::span<const std::complex<double>> z,
                              Algorithm algorithm);

struct ComplexityRow {
    std::uint64_t n = 0;
    std::uint64_t direct_adds = 0;
    std::uint64_t direct_mults = 0;
    std::uint64_t fast_adds = 0;
    std::uint64_t fast_mults = 0;
    Variant variant = Variant::scaled;
};

/// Rows for n = 4, 8, ..., max_n (max_n a power of two in [4, 2^20]).
std::vector<ComplexityRow> complexity_table(std::uint64_t max_n, Variant variant);

/// CSV with header `N,direct_add,fast_add,direct_mult,fast_mult`.
void write_complexity_csv(std::ostream& out, std::span<const ComplexityRow> rows);

/// Formula counts next to instrumented counts of this implementation.
struct MeasuredRow {
    std::uint64_t n = 0;
    OpCount formula;
    OpCount measured;
    OpCount construction;
};

std::vector<MeasuredRow> measured_table(std::uint64_t max_n, Variant variant, const Node& node);

/// CSV with header
/// `N,formula_add,measured_add,formula_mult,measured_mult,construction_add,construction_mult`.
void write_measured_csv(std::ostream& out, std::span<const MeasuredRow> rows);

}  // namespace fastdvm
