// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fastdvm {

/// Invalid vector or matrix dimension (odd, not a power of two, mismatched).
class SizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid parameter value other than a size (zero node, bin out of range, ...).
class ValueError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The error-bound prefactor k*eta/(1 - k*eta) is undefined because k*eta >= 1.
class BoundInapplicableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

inline constexpr unsigned log2_exact(std::size_t n) noexcept {
    unsigned t = 0;
    while (n > 1) {
        n >>= 1;
        ++t;
    }
    return t;
}

inline void require_power_of_two(std::size_t n, std::size_t min_size, const char* what) {
    if (!is_power_of_two(n) || n < min_size) {
        throw SizeError(std::string(what) + ": size " + std::to_string(n) +
                        " is not a power of two >= " + std::to_string(min_size));
    }
}

}  // namespace fastdvm
