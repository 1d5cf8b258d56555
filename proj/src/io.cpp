// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

namespace fastdvm {
namespace {

template <class Real>
std::string format_shortest(Real x) {
    if (std::isnan(x)) {
        return "NaN";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw ParseError(line, "not a number: '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::string format_real(double x) { return format_shortest(x); }
std::string format_real(float x) { return format_shortest(x); }

std::vector<std::complex<double>> read_vector_csv(std::istream& in) {
    std::vector<std::complex<double>> z;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const std::string_view row = trim(text);
        if (row.empty()) {
            continue;
        }
        const auto fields = split(row, ',');
        if (fields.size() != 2) {
            throw ParseError(line, "expected 're,im', got " + std::to_string(fields.size()) + " field(s)");
        }
        z.emplace_back(parse_real(fields[0], line), parse_real(fields[1], line));
    }
    return z;
}

template <class Real>
void write_vector_csv(std::ostream& out, std::span<const std::complex<Real>> y) {
    for (const auto& v : y) {
        out << format_real(v.real()) << ',' << format_real(v.imag()) << '\n';
    }
}

template void write_vector_csv<double>(std::ostream&, std::span<const std::complex<double>>);
template void write_vector_csv<float>(std::ostream&, std::span<const std::complex<float>>);

DenseMatrix<std::complex<double>> read_frame_csv(std::istream& in) {
    std::vector<std::vector<std::complex<double>>> rows;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const std::string_view row = trim(text);
        if (row.empty()) {
            continue;
        }
        const auto fields = split(row, ',');
        if (fields.size() % 2 != 0) {
            throw ParseError(line, "expected an even number of fields (re,im pairs)");
        }
        std::vector<std::complex<double>> values;
        for (std::size_t i = 0; i < fields.size(); i += 2) {
            values.emplace_back(parse_real(fields[i], line), parse_real(fields[i + 1], line));
        }
        if (!rows.empty() && values.size() != rows.front().size()) {
            throw ParseError(line, "row has " + std::to_string(values.size()) + " bins, expected " +
                                       std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(values));
    }
    DenseMatrix<std::complex<double>> frame(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            frame(r, c) = rows[r][c];
        }
    }
    return frame;
}

template <class Real>
void write_frame_csv(std::ostream& out, const DenseMatrix<std::complex<Real>>& frame) {
    for (std::size_t r = 0; r < frame.rows(); ++r) {
        for (std::size_t c = 0; c < frame.cols(); ++c) {
            if (c > 0) {
                out << ',';
            }
            out << format_real(frame(r, c).real()) << ',' << format_real(frame(r, c).imag());
        }
        out << '\n';
    }
}

template void write_frame_csv<double>(std::ostream&, const DenseMatrix<std::complex<double>>&);

}  // namespace fastdvm
