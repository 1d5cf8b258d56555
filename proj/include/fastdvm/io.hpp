// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastdvm/dense.hpp"

namespace fastdvm {

/// Malformed text input; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Shortest representation that round-trips in the given precision.
/// Non-finite values print as `NaN`, `inf`, `-inf`.
std::string format_real(double x);
std::string format_real(float x);

/// One `re,im` pair per line. Blank lines are skipped.
std::vector<std::complex<double>> read_vector_csv(std::istream& in);

template <class Real>
void write_vector_csv(std::ostream& out, std::span<const std::complex<Real>> y);

/// Antenna-major frame: one row per antenna, `re,im` pairs for bins 0..M-1.
DenseMatrix<std::complex<double>> read_frame_csv(std::istream& in);

template <class Real>
void write_frame_csv(std::ostream& out, const DenseMatrix<std::complex<Real>>& frame);

}  // namespace fastdvm
