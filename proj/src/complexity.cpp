// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/complexity.hpp"

#include <ostream>

#include "fastdvm/errors.hpp"

namespace fastdvm {
namespace {

constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 20;

unsigned checked_log2(std::uint64_t n, const char* what) {
    require_power_of_two(n, 2, what);
    if (n > (std::uint64_t{1} << 30)) {
        throw SizeError(std::string(what) + ": size exceeds 2^30, 4^t would overflow");
    }
    return log2_exact(n);
}

}  // namespace

OpCount sdvm_counts_formula(std::uint64_t n) {
    const std::uint64_t t = checked_log2(n, "sdvm_counts_formula");
    const std::uint64_t four_t = n * n;
    return {(n * t + four_t - n) / 2, 3 * n * t / 2 + four_t / 2 - 2 * n};
}

OpCount dvm_counts_formula(std::uint64_t n) {
    const std::uint64_t t = checked_log2(n, "dvm_counts_formula");
    const std::uint64_t four_t = n * n;
    // 7Nt/2 + 4^t/2 >= 7N/2 for t >= 1.
    return {(n * t + four_t - n) / 2, (7 * n * t + four_t - 7 * n) / 2};
}

OpCount direct_counts(std::uint64_t n, Variant variant) {
    if (n < 1) {
        throw SizeError("direct_counts: size must be >= 1");
    }
    const std::uint64_t adds = n * (n - 1);
    return {adds, variant == Variant::scaled ? n * (n - 1) : n * n};
}

OpCount formula_counts(std::uint64_t n, Variant variant) {
    return variant == Variant::scaled ? sdvm_counts_formula(n) : dvm_counts_formula(n);
}

MeasuredCounts measure_counts(const FactorizationPlan<double>& plan, std::span<const std::complex<double>> z,
                              Algorithm algorithm) {
    MeasuredCounts out;
    CountingArith<double> apply;
    switch (algorithm) {
        case Algorithm::sdvm:
        case Algorithm::dvm: {
            CountingArith<double> construction;
            const FactorizationPlan<double> counted = build_plan<double>(plan.n, plan.node, construction);
            out.construction = construction.count();
            if (algorithm == Algorithm::sdvm) {
                sdvm_multiply(counted, z, apply);
            } else {
                dvm_multiply(counted, z, apply);
            }
            break;
        }
        case Algorithm::direct_scaled:
            direct_multiply(plan.n, plan.alpha, z, Variant::scaled, apply);
            break;
        case Algorithm::direct_dvm:
            direct_multiply(plan.n, plan.alpha, z, Variant::dvm, apply);
            break;
    }
    out.apply = apply.count();
    return out;
}

std::vector<ComplexityRow> complexity_table(std::uint64_t max_n, Variant variant) {
    require_power_of_two(max_n, 4, "complexity_table");
    if (max_n > kMaxTableSize) {
        throw SizeError("complexity_table: max size must be <= 2^20");
    }
    std::vector<ComplexityRow> rows;
    for (std::uint64_t n = 4; n <= max_n; n *= 2) {
        const OpCount direct = direct_counts(n, variant);
        const OpCount fast = formula_counts(n, variant);
        rows.push_back({n, direct.adds, direct.mults, fast.adds, fast.mults, variant});
    }
    return rows;
}

void write_complexity_csv(std::ostream& out, std::span<const ComplexityRow> rows) {
    out << "N,direct_add,fast_add,direct_mult,fast_mult\n";
    for (const ComplexityRow& r : rows) {
        out << r.n << ',' << r.direct_adds << ',' << r.fast_adds << ',' << r.direct_mults << ','
            << r.fast_mults << '\n';
    }
}

std::vector<MeasuredRow> measured_table(std::uint64_t max_n, Variant variant, const Node& node) {
    require_power_of_two(max_n, 4, "measured_table");
    std::vector<MeasuredRow> rows;
    for (std::uint64_t n = 4; n <= max_n; n *= 2) {
        // Counts do not depend on the data, only on the plan constants.
        const std::vector<std::complex<double>> z(n, std::complex<double>(0.5, 0.25));
        const FactorizationPlan<double> plan = build_plan<double>(n, node);
        const MeasuredCounts m =
            measure_counts(plan, z, variant == Variant::scaled ? Algorithm::sdvm : Algorithm::dvm);
        rows.push_back({n, formula_counts(n, variant), m.apply, m.construction});
    }
    return rows;
}

void write_measured_csv(std::ostream& out, std::span<const MeasuredRow> rows) {
    out << "N,formula_add,measured_add,formula_mult,measured_mult,construction_add,construction_mult\n";
    for (const MeasuredRow& r : rows) {
        out << r.n << ',' << r.formula.adds << ',' << r.measured.adds << ',' << r.formula.mults << ','
            << r.measured.mults << ',' << r.construction.adds << ',' << r.construction.mults << '\n';
    }
}

}  // namespace fastdvm
