// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastdvm/beamformer.hpp"
#include "fastdvm/complexity.hpp"
#include "fastdvm/error_analysis.hpp"
#include "fastdvm/multiply.hpp"
#include "fastdvm/node.hpp"
#include "fastdvm/plan.hpp"

namespace py = pybind11;
using namespace fastdvm;

namespace {

using C = std::complex<double>;
using CArray = py::array_t<C, py::array::c_style | py::array::forcecast>;

Variant parse_variant(const std::string& name) {
    if (name == "scaled" || name == "sdvm") {
        return Variant::scaled;
    }
    if (name == "dvm") {
        return Variant::dvm;
    }
    throw ValueError("variant must be 'scaled' or 'dvm', got '" + name + "'");
}

std::vector<C> to_vector(const CArray& a) {
    if (a.ndim() != 1) {
        throw SizeError("expected a 1-D array");
    }
    return std::vector<C>(a.data(), a.data() + a.size());
}

template <class T>
CArray to_array(const std::vector<std::complex<T>>& v) {
    CArray out(static_cast<py::ssize_t>(v.size()));
    auto w = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < v.size(); ++i) {
        w(static_cast<py::ssize_t>(i)) = C(v[i]);
    }
    return out;
}

CArray frame_to_array(const ComplexFrame& f) {
    CArray out({static_cast<py::ssize_t>(f.rows()), static_cast<py::ssize_t>(f.cols())});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = f(i, j);
        }
    }
    return out;
}

ComplexFrame array_to_frame(const CArray& a) {
    if (a.ndim() != 2) {
        throw SizeError("expected a 2-D array of shape (n_antennas, dft_size)");
    }
    ComplexFrame f(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i) {
        for (py::ssize_t j = 0; j < a.shape(1); ++j) {
            f(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
        }
    }
    return f;
}

template <class Real>
CArray multiply_in(const Node& node, const std::vector<C>& z, Variant variant) {
    std::vector<std::complex<Real>> zr(z.begin(), z.end());
    const auto plan = build_plan<Real>(z.size(), node);
    return to_array(fast_multiply(plan, std::span<const std::complex<Real>>(zr), variant));
}

CArray multiply_node(const CArray& z, const Node& node, const std::string& variant, const std::string& precision,
                     bool raw) {
    const std::vector<C> zv = to_vector(z);
    if (zv.size() >= 4 && node.is_degenerate(zv.size()) && !raw) {
        throw ValueError("degenerate node: alpha^d == 1 for some d < " + std::to_string(zv.size()) +
                         "; pass raw=True to compute anyway");
    }
    if (precision == "double") {
        return multiply_in<double>(node, zv, parse_variant(variant));
    }
    if (precision == "single") {
        return multiply_in<float>(node, zv, parse_variant(variant));
    }
    throw ValueError("precision must be 'single' or 'double'");
}

ArrayConfig make_config(std::size_t n_antennas, std::size_t dft_size, double spacing, double wave_speed,
                        std::optional<double> sample_period) {
    ArrayConfig c = ArrayConfig::with_default_period(n_antennas, spacing, wave_speed, dft_size);
    if (sample_period) {
        c.sample_period = *sample_period;
    }
    c.validate();
    return c;
}

py::dict error_report(const ErrorReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["variant"] = std::string(to_string(r.variant));
    d["measured_error"] = r.measured_error;
    d["bound"] = r.bound_value;
    d["degenerate"] = r.degenerate;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fastdvm, m) {
    m.doc() = "Fast delay Vandermonde matrix products";

    py::class_<Node>(m, "Node")
        .def_static("from_angle", &Node::from_angle, py::arg("theta"), "Node alpha = exp(-i theta).")
        .def_static("from_value", &Node::from_value, py::arg("alpha"), "Node with an arbitrary complex value.")
        .def_property_readonly("value", &Node::value)
        .def_property_readonly("angle", &Node::angle)
        .def("is_degenerate", &Node::is_degenerate, py::arg("n"))
        .def("__repr__", [](const Node& n) {
            return "Node(" + std::to_string(n.value().real()) + (n.value().imag() < 0 ? "" : "+") +
                   std::to_string(n.value().imag()) + "j)";
        });

    m.def("multiply", &multiply_node, py::arg("z"), py::arg("node"), py::arg("variant") = "dvm",
          py::arg("precision") = "double", py::arg("raw") = false,
          "Fast product with the n x n matrix [alpha^{kl}]: rows k = 1..n ('dvm') or k = 0..n-1 ('scaled').");

    m.def(
        "direct_multiply",
        [](const CArray& z, const Node& node, const std::string& variant) {
            const std::vector<C> zv = to_vector(z);
            return to_array(direct_multiply<double>(zv.size(), node.value(), std::span<const C>(zv),
                                                    parse_variant(variant)));
        },
        py::arg("z"), py::arg("node"), py::arg("variant") = "dvm", "Dense reference product.");

    m.def(
        "formula_counts",
        [](std::uint64_t n, const std::string& variant) {
            const OpCount c = formula_counts(n, parse_variant(variant));
            return py::make_tuple(c.adds, c.mults);
        },
        py::arg("n"), py::arg("variant") = "scaled", "(additions, multiplications) of the fast algorithm.");

    m.def(
        "direct_counts",
        [](std::uint64_t n, const std::string& variant) {
            const OpCount c = direct_counts(n, parse_variant(variant));
            return py::make_tuple(c.adds, c.mults);
        },
        py::arg("n"), py::arg("variant") = "scaled", "(additions, multiplications) of the dense product.");

    m.def(
        "complexity_table",
        [](std::uint64_t max_n, const std::string& variant) {
            py::list rows;
            for (const ComplexityRow& r : complexity_table(max_n, parse_variant(variant))) {
                py::dict d;
                d["N"] = r.n;
                d["direct_add"] = r.direct_adds;
                d["fast_add"] = r.fast_adds;
                d["direct_mult"] = r.direct_mults;
                d["fast_mult"] = r.fast_mults;
                rows.append(d);
            }
            return rows;
        },
        py::arg("max_n") = 4096, py::arg("variant") = "scaled");

    m.def(
        "forward_error",
        [](const CArray& z, const Node& node, const std::string& variant, double c) {
            const std::vector<C> zv = to_vector(z);
            BoundParams params;
            params.c = c;
            return error_report(forward_error(zv.size(), node, zv, parse_variant(variant), params));
        },
        py::arg("z"), py::arg("node"), py::arg("variant") = "scaled", py::arg("c") = 1.0,
        "Single-vs-double forward error with the theoretical bound.");

    m.def(
        "error_table",
        [](std::size_t max_n, const Node& node, std::uint64_t seed, bool raw) {
            py::list rows;
            for (const ErrorTableRow& r : error_table(max_n, node, seed, raw)) {
                py::dict d;
                d["N"] = r.n;
                d["err_sdvm_real"] = r.err_sdvm_real;
                d["err_dvm_real"] = r.err_dvm_real;
                d["err_sdvm_complex"] = r.err_sdvm_complex;
                d["err_dvm_complex"] = r.err_dvm_complex;
                d["degenerate"] = r.degenerate;
                rows.append(d);
            }
            return rows;
        },
        py::arg("max_n") = 128, py::arg("node"), py::arg("seed") = 0, py::arg("raw") = false);

    m.def(
        "synthesize_beam_source",
        [](std::size_t n_antennas, std::size_t dft_size, std::size_t beam, std::vector<std::size_t> bins,
           double spacing, double wave_speed, std::optional<double> sample_period, C amplitude, double noise,
           std::uint64_t seed) {
            const ArrayConfig c = make_config(n_antennas, dft_size, spacing, wave_speed, sample_period);
            std::vector<SourceSpec> src;
            for (std::size_t b : bins) {
                src.push_back(SourceSpec::at_beam(beam, b, amplitude));
            }
            return frame_to_array(synthesize(c, src, noise, seed).data);
        },
        py::arg("n_antennas"), py::arg("dft_size"), py::arg("beam"), py::arg("bins"), py::arg("spacing") = 2.5e-3,
        py::arg("wave_speed") = 3.0e8, py::arg("sample_period") = py::none(), py::arg("amplitude") = C(1.0),
        py::arg("noise") = 0.0, py::arg("seed") = 0,
        "Spectral frame (n_antennas x dft_size) of one source matched to a beam index 1..n_antennas.");

    m.def(
        "beamform",
        [](const CArray& frame, double spacing, double wave_speed, std::optional<double> sample_period,
           unsigned threads) {
            const ComplexFrame f = array_to_frame(frame);
            const ArrayConfig c = make_config(f.rows(), f.cols(), spacing, wave_speed, sample_period);
            BeamformOptions options;
            options.threads = threads;
            const BeamFrame b = beamform(SpectralFrame{f, 0}, c, options);
            return py::make_tuple(frame_to_array(b.data), b.degenerate_bins);
        },
        py::arg("frame"), py::arg("spacing") = 2.5e-3, py::arg("wave_speed") = 3.0e8,
        py::arg("sample_period") = py::none(), py::arg("threads") = 1,
        "Beams (row k-1 is beam k) for every bin and the per-bin degeneracy flags.");
}
