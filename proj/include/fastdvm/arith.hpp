// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

namespace fastdvm {

/// Complex addition and multiplication tallies.
struct OpCount {
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;

    OpCount& operator+=(const OpCount& other) noexcept {
        adds += other.adds;
        mults += other.mults;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) noexcept { return a += b; }
    friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// True for the multiplicands that cost nothing: +1, -1, +i, -i (exact comparison).
template <class Real>
constexpr bool is_trivial_multiplicand(const std::complex<Real>& c) noexcept {
    const Real re = c.real();
    const Real im = c.imag();
    return (im == Real(0) && (re == Real(1) || re == Real(-1))) ||
           (re == Real(0) && (im == Real(1) || im == Real(-1)));
}

// The fast algorithms are written against an arithmetic policy so the same code
// path produces plain results and instrumented operation counts. `scale` takes
// the structural constant first; only that operand is tested for triviality.

template <class Real>
struct PlainArith {
    using Complex = std::complex<Real>;

    static Complex add(const Complex& a, const Complex& b) noexcept { return a + b; }
    static Complex sub(const Complex& a, const Complex& b) noexcept { return a - b; }
    static Complex scale(const Complex& constant, const Complex& x) noexcept { return constant * x; }
    static Complex mul(const Complex& a, const Complex& b) noexcept { return a * b; }
    static Complex dense(const Complex& entry, const Complex& x) noexcept { return entry * x; }
    static Complex reciprocal(const Complex& a) noexcept { return Complex(1) / a; }
};

template <class Real>
class CountingArith {
public:
    using Complex = std::complex<Real>;

    Complex add(const Complex& a, const Complex& b) noexcept {
        ++count_.adds;
        return a + b;
    }
    Complex sub(const Complex& a, const Complex& b) noexcept {
        ++count_.adds;
        return a - b;
    }
    Complex scale(const Complex& constant, const Complex& x) noexcept {
        if (!is_trivial_multiplicand(constant)) {
            ++count_.mults;
        }
        return constant * x;
    }
    /// Product of two computed constants (plan construction).
    Complex mul(const Complex& a, const Complex& b) noexcept {
        if (!is_trivial_multiplicand(a) && !is_trivial_multiplicand(b)) {
            ++count_.mults;
        }
        return a * b;
    }

    /// Entry of a materialized dense matrix times data; always counted.
    Complex dense(const Complex& entry, const Complex& x) noexcept {
        ++count_.mults;
        return entry * x;
    }
    /// Counted as one multiplication.
    Complex reciprocal(const Complex& a) noexcept {
        if (!is_trivial_multiplicand(a)) {
            ++count_.mults;
        }
        return Complex(1) / a;
    }

    const OpCount& count() const noexcept { return count_; }

private:
    OpCount count_;
};

}  // namespace fastdvm
