// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fastdvm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "fastdvm/beamformer.hpp"
#include "fastdvm/complexity.hpp"
#include "fastdvm/error_analysis.hpp"
#include "fastdvm/errors.hpp"
#include "fastdvm/io.hpp"
#include "fastdvm/multiply.hpp"
#include "fastdvm/random.hpp"

namespace fastdvm::cli {
namespace {

using json = nlohmann::ordered_json;

/// Raised for failures that map to a specific exit code.
struct CliFailure : std::runtime_error {
    CliFailure(int code, const std::string& message) : std::runtime_error(message), code(code) {}
    int code;
};

struct NodeOptions {
    std::string theta;
    std::optional<double> alpha_re;
    std::optional<double> alpha_im;

    Node resolve(const std::string& default_theta) const {
        if (alpha_re || alpha_im) {
            if (!theta.empty()) {
                throw CliFailure(kUsage, "--theta and --alpha-re/--alpha-im are mutually exclusive");
            }
            return Node::from_value({alpha_re.value_or(0.0), alpha_im.value_or(0.0)});
        }
        return Node::from_angle(parse_angle(theta.empty() ? default_theta : theta));
    }

    std::string describe(const std::string& default_theta) const {
        if (alpha_re || alpha_im) {
            return format_real(alpha_re.value_or(0.0)) + "," + format_real(alpha_im.value_or(0.0));
        }
        return theta.empty() ? default_theta : theta;
    }
};

void add_node_options(CLI::App* cmd, NodeOptions& node, const std::string& default_theta) {
    cmd->add_option("--theta", node.theta,
                    "Node angle theta, alpha = exp(-i theta): <float>, pi/<int>, <float>*pi/<int> (default " +
                        default_theta + ")");
    cmd->add_option("--alpha-re", node.alpha_re, "Real part of a general complex node");
    cmd->add_option("--alpha-im", node.alpha_im, "Imaginary part of a general complex node");
}

std::vector<std::complex<double>> load_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CliFailure(kIo, "cannot open input file '" + path + "'");
    }
    try {
        return read_vector_csv(in);
    } catch (const ParseError& e) {
        throw CliFailure(kUsage, path + ":" + e.what());
    }
}

/// Writes to `--output` if given, else to the process stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw CliFailure(kIo, "cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    void finish() {
        stream().flush();
        if (!stream()) {
            throw CliFailure(kIo, "write failed");
        }
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

Variant parse_variant(const std::string& text) {
    if (text == "scaled" || text == "sdvm") {
        return Variant::scaled;
    }
    if (text == "dvm") {
        return Variant::dvm;
    }
    throw CliFailure(kUsage, "unknown variant '" + text + "' (expected scaled or dvm)");
}

unsigned default_threads() {
    if (const char* env = std::getenv("DVM_THREADS")) {
        unsigned value = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec == std::errc() && value > 0) {
            return value;
        }
    }
    return 1;
}

template <class Real>
json vector_rows(std::span<const std::complex<Real>> y) {
    json rows = json::array();
    for (const auto& v : y) {
        rows.push_back({static_cast<double>(v.real()), static_cast<double>(v.imag())});
    }
    return rows;
}

json json_number(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_real(x);
}

// ---------------------------------------------------------------- multiply

struct MultiplyOptions {
    std::size_t size = 0;
    NodeOptions node;
    bool scaled = false;
    std::string input;
    bool random = false;
    std::uint64_t seed = 0;
    std::string precision = "double";
    std::string format = "csv";
    bool raw = false;
    std::string output;
};

template <class Real>
std::vector<std::complex<Real>> to_precision(std::span<const std::complex<double>> z) {
    std::vector<std::complex<Real>> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = {static_cast<Real>(z[i].real()), static_cast<Real>(z[i].imag())};
    }
    return out;
}

template <class Real>
void emit_product(const MultiplyOptions& o, const Node& node, std::span<const std::complex<double>> z,
                  std::ostream& out, std::ostream& err) {
    const FactorizationPlan<Real> plan = build_plan<Real>(o.size, node);
    const Variant variant = o.scaled ? Variant::scaled : Variant::dvm;
    const std::vector<std::complex<Real>> zr = to_precision<Real>(z);
    const CheckedProduct<Real> product = multiply_checked<Real>(plan, zr, variant);
    if (product.degenerate) {
        err << "warning: " << product.warning << '\n';
    }
    if (o.format == "json") {
        json doc;
        doc["meta"] = {{"n", o.size},
                       {"theta", o.node.describe("0")},
                       {"algorithm", to_string(variant)},
                       {"precision", o.precision},
                       {"degenerate", plan.degenerate}};
        doc["rows"] = vector_rows<Real>(product.y);
        out << doc.dump(2) << '\n';
    } else {
        write_vector_csv<Real>(out, product.y);
    }
}

int cmd_multiply(const MultiplyOptions& o, std::ostream& out, std::ostream& err) {
    require_power_of_two(o.size, 2, "multiply --size");
    const Node node = o.node.resolve("0");
    // The 2x2 base case is a dense product; only the companion-matrix levels
    // need distinct nodes.
    if (o.size >= 4 && node.is_degenerate(o.size) && !o.raw) {
        throw CliFailure(kDegenerate, "degenerate node: alpha^d == 1 for some d < " + std::to_string(o.size) +
                                          "; the matrix nodes repeat (rerun with --raw to compute anyway)");
    }
    std::vector<std::complex<double>> z;
    if (!o.input.empty() && o.random) {
        throw CliFailure(kUsage, "--input and --random are mutually exclusive");
    }
    if (!o.input.empty()) {
        z = load_vector(o.input);
    } else if (o.random) {
        z = Rng(o.seed).unit_vector(o.size);
    } else {
        throw CliFailure(kUsage, "multiply needs --input <file> or --random");
    }
    if (z.size() != o.size) {
        throw CliFailure(kUsage, "input has " + std::to_string(z.size()) + " entries, expected " +
                                     std::to_string(o.size));
    }
    Sink sink(o.output, out);
    if (o.precision == "single") {
        emit_product<float>(o, node, z, sink.stream(), err);
    } else {
        emit_product<double>(o, node, z, sink.stream(), err);
    }
    sink.finish();
    return kSuccess;
}

// -------------------------------------------------------------- complexity

struct ComplexityOptions {
    std::string variant = "scaled";
    std::uint64_t max_size = 4096;
    bool measured = false;
    NodeOptions node;
    std::string format = "csv";
    std::string output;
};

int cmd_complexity(const ComplexityOptions& o, std::ostream& out) {
    const Variant variant = parse_variant(o.variant);
    Sink sink(o.output, out);
    std::ostream& os = sink.stream();
    const char* convention =
        "complex additions and multiplications; multiplications by +-1 and +-i and permutations are free";
    if (o.measured) {
        const Node node = o.node.resolve("pi/32");
        const auto rows = measured_table(o.max_size, variant, node);
        if (o.format == "json") {
            json doc;
            doc["meta"] = {{"variant", o.variant},
                           {"theta", o.node.describe("pi/32")},
                           {"convention", convention},
                           {"construction", "plan construction counted separately from the per-multiply count"}};
            doc["rows"] = json::array();
            for (const auto& r : rows) {
                doc["rows"].push_back({{"N", r.n},
                                       {"formula_add", r.formula.adds},
                                       {"measured_add", r.measured.adds},
                                       {"formula_mult", r.formula.mults},
                                       {"measured_mult", r.measured.mults},
                                       {"construction_add", r.construction.adds},
                                       {"construction_mult", r.construction.mults}});
            }
            os << doc.dump(2) << '\n';
        } else {
            write_measured_csv(os, rows);
        }
    } else {
        const auto rows = complexity_table(o.max_size, variant);
        if (o.format == "json") {
            json doc;
            doc["meta"] = {{"variant", o.variant}, {"convention", convention}};
            doc["rows"] = json::array();
            for (const auto& r : rows) {
                doc["rows"].push_back({{"N", r.n},
                                       {"direct_add", r.direct_adds},
                                       {"fast_add", r.fast_adds},
                                       {"direct_mult", r.direct_mults},
                                       {"fast_mult", r.fast_mults}});
            }
            os << doc.dump(2) << '\n';
        } else {
            write_complexity_csv(os, rows);
        }
    }
    sink.finish();
    return kSuccess;
}

// ------------------------------------------------------------------ errors

struct ErrorsOptions {
    std::size_t max_size = 128;
    NodeOptions node;
    std::uint64_t seed = 0;
    bool raw = false;
    std::string format = "csv";
    std::string output;
};

int cmd_errors(const ErrorsOptions& o, std::ostream& out) {
    const Node node = o.node.resolve("pi/32");
    const auto rows = error_table(o.max_size, node, o.seed, o.raw);
    Sink sink(o.output, out);
    if (o.format == "json") {
        json doc;
        doc["meta"] = {{"theta", o.node.describe("pi/32")},
                       {"seed", o.seed},
                       {"raw", o.raw},
                       {"reference", "double"},
                       {"computed", "single"},
                       {"inputs", "uniform (0,1) real and (0,1)+i(0,1) complex"}};
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"N", r.n},
                                   {"err_sdvm_real", json_number(r.err_sdvm_real)},
                                   {"err_dvm_real", json_number(r.err_dvm_real)},
                                   {"err_sdvm_complex", json_number(r.err_sdvm_complex)},
                                   {"err_dvm_complex", json_number(r.err_dvm_complex)},
                                   {"degenerate", r.degenerate}});
        }
        sink.stream() << doc.dump(2) << '\n';
    } else {
        write_error_csv(sink.stream(), rows);
    }
    sink.finish();
    return kSuccess;
}

// ------------------------------------------------------------------- bound

struct BoundOptions {
    std::size_t size = 0;
    NodeOptions node;
    std::string variant = "both";
    std::string input;
    bool random = false;
    std::uint64_t seed = 0;
    double c = 1.0;
    std::string precision = "single";
    std::string format = "csv";
    std::string output;
};

int cmd_bound(const BoundOptions& o, std::ostream& out) {
    require_power_of_two(o.size, 2, "bound --size");
    const Node node = o.node.resolve("pi/32");
    if (node.is_degenerate(o.size)) {
        throw CliFailure(kDegenerate, "degenerate node for size " + std::to_string(o.size) +
                                          ": the error bound does not apply");
    }
    std::vector<std::complex<double>> z;
    if (!o.input.empty()) {
        z = load_vector(o.input);
    } else if (o.random) {
        z = Rng(o.seed).uniform_complex_vector(o.size);
    } else {
        throw CliFailure(kUsage, "bound needs --input <file> or --random");
    }
    if (z.size() != o.size) {
        throw CliFailure(kUsage, "input has " + std::to_string(z.size()) + " entries, expected " +
                                     std::to_string(o.size));
    }
    BoundParams params;
    params.c = o.c;
    params.u = o.precision == "double" ? unit_roundoff<double>() : unit_roundoff<float>();

    std::vector<Variant> variants;
    if (o.variant == "both") {
        variants = {Variant::scaled, Variant::dvm};
    } else {
        variants = {parse_variant(o.variant)};
    }

    struct Row {
        Variant variant;
        double bound;
        double measured;
    };
    std::vector<Row> rows;
    for (Variant v : variants) {
        const double b = bound_value(o.size, node, z, v, params);
        rows.push_back({v, b, forward_error(o.size, node, z, v, params).measured_error});
    }

    Sink sink(o.output, out);
    if (o.format == "json") {
        json doc;
        doc["meta"] = {{"n", o.size},
                       {"theta", o.node.describe("pi/32")},
                       {"u", params.u},
                       {"c", params.c},
                       {"mu", params.mu()}};
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"variant", to_string(r.variant)},
                                   {"bound", json_number(r.bound)},
                                   {"measured_error", json_number(r.measured)}});
        }
        sink.stream() << doc.dump(2) << '\n';
    } else {
        sink.stream() << "N,variant,bound,measured_error\n";
        for (const auto& r : rows) {
            sink.stream() << o.size << ',' << to_string(r.variant) << ',' << format_real(r.bound) << ','
                          << format_real(r.measured) << '\n';
        }
    }
    sink.finish();
    return kSuccess;
}

// --------------------------------------------------------------- beamform

struct BeamformOptions_ {
    std::size_t antennas = 16;
    std::size_t dft_size = 8;
    double spacing = 2.5e-3;
    double wave_speed = 3.0e8;
    double sample_period = 0.0;
    std::optional<std::size_t> source_beam;
    std::optional<double> source_direction;
    std::vector<std::size_t> bins;
    double amplitude = 1.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string input;
    bool time_domain = false;
    bool powers = false;
    std::optional<unsigned> threads;
    std::string format = "csv";
    std::string output;
};

int cmd_beamform(const BeamformOptions_& o, std::ostream& out) {
    ArrayConfig config = ArrayConfig::with_default_period(o.antennas, o.spacing, o.wave_speed, o.dft_size);
    if (o.sample_period > 0.0) {
        config.sample_period = o.sample_period;
    }
    config.validate();

    SpectralFrame frame;
    std::vector<std::size_t> report_bins;
    if (!o.input.empty()) {
        if (o.source_beam || o.source_direction) {
            throw CliFailure(kUsage, "--input cannot be combined with a synthesized source");
        }
        std::ifstream in(o.input);
        if (!in) {
            throw CliFailure(kIo, "cannot open input file '" + o.input + "'");
        }
        ComplexFrame data;
        try {
            data = read_frame_csv(in);
        } catch (const ParseError& e) {
            throw CliFailure(kUsage, o.input + ":" + e.what());
        }
        if (data.rows() != config.n_antennas || data.cols() != config.dft_size) {
            throw CliFailure(kUsage, "input frame is " + std::to_string(data.rows()) + "x" +
                                         std::to_string(data.cols()) + ", expected " +
                                         std::to_string(config.n_antennas) + "x" + std::to_string(config.dft_size));
        }
        frame = o.time_domain ? temporal_dft(data, config) : SpectralFrame{std::move(data), 0};
        for (std::size_t m = 0; m < config.dft_size; ++m) {
            for (std::size_t l = 0; l < config.n_antennas; ++l) {
                if (frame.data(l, m) != std::complex<double>(0.0)) {
                    report_bins.push_back(m);
                    break;
                }
            }
        }
    } else {
        if (o.source_beam.has_value() == o.source_direction.has_value()) {
            throw CliFailure(kUsage, "give exactly one of --source-beam, --source-direction, or an --input frame");
        }
        report_bins = o.bins.empty() ? std::vector<std::size_t>{1} : o.bins;
        std::vector<SourceSpec> sources;
        for (std::size_t m : report_bins) {
            sources.push_back(o.source_beam ? SourceSpec::at_beam(*o.source_beam, m, o.amplitude)
                                            : SourceSpec::from_direction(*o.source_direction, m, o.amplitude));
        }
        frame = synthesize(config, sources, o.noise, o.seed);
    }

    PlanCache cache;
    const BeamFrame beams = beamform(frame, config, {&cache, o.threads.value_or(default_threads())});
    const DenseMatrix<double> powers = beam_powers(beams);

    Sink sink(o.output, out);
    std::ostream& os = sink.stream();
    if (o.powers) {
        if (o.format == "json") {
            json doc;
            doc["meta"] = {{"antennas", config.n_antennas}, {"dft_size", config.dft_size}, {"tau", config.tau()}};
            doc["rows"] = json::array();
            for (std::size_t k = 0; k < powers.rows(); ++k) {
                json row = json::array();
                for (std::size_t m = 0; m < powers.cols(); ++m) {
                    row.push_back(powers(k, m));
                }
                doc["rows"].push_back(row);
            }
            os << doc.dump(2) << '\n';
        } else {
            for (std::size_t k = 0; k < powers.rows(); ++k) {
                for (std::size_t m = 0; m < powers.cols(); ++m) {
                    os << (m ? "," : "") << format_real(powers(k, m));
                }
                os << '\n';
            }
        }
    } else if (o.format == "json") {
        json doc;
        doc["meta"] = {{"antennas", config.n_antennas},
                       {"dft_size", config.dft_size},
                       {"tau", config.tau()},
                       {"sample_period", config.sample_period}};
        doc["rows"] = json::array();
        for (std::size_t m : report_bins) {
            const std::size_t k = argmax_beam(powers, m);
            doc["rows"].push_back({{"bin", m},
                                   {"argmax_beam", k},
                                   {"peak_power", powers(k - 1, m)},
                                   {"degenerate", static_cast<bool>(beams.degenerate_bins[m])}});
        }
        os << doc.dump(2) << '\n';
    } else {
        os << "bin,argmax_beam,peak_power,degenerate\n";
        for (std::size_t m : report_bins) {
            const std::size_t k = argmax_beam(powers, m);
            os << m << ',' << k << ',' << format_real(powers(k - 1, m)) << ','
               << (beams.degenerate_bins[m] ? 1 : 0) << '\n';
        }
    }
    sink.finish();
    return kSuccess;
}

}  // namespace

double parse_angle(std::string_view text) {
    auto fail = [&]() -> double { throw CliFailure(kUsage, "cannot parse angle '" + std::string(text) + "'"); };
    std::string_view s = text;
    if (s.empty()) {
        return fail();
    }
    double sign = 1.0;
    if (s.front() == '-' || s.front() == '+') {
        sign = s.front() == '-' ? -1.0 : 1.0;
        s.remove_prefix(1);
    }
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        double value = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            return fail();
        }
        return sign * value;
    }
    std::string_view coeff = s.substr(0, pi_pos);
    std::string_view rest = s.substr(pi_pos + 2);
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.remove_suffix(1);
    }
    double multiplier = 1.0;
    if (!coeff.empty()) {
        const auto res = std::from_chars(coeff.data(), coeff.data() + coeff.size(), multiplier);
        if (res.ec != std::errc() || res.ptr != coeff.data() + coeff.size()) {
            return fail();
        }
    }
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            return fail();
        }
        rest.remove_prefix(1);
        long long d = 0;
        const auto res = std::from_chars(rest.data(), rest.data() + rest.size(), d);
        if (rest.empty() || res.ec != std::errc() || res.ptr != rest.data() + rest.size() || d == 0) {
            return fail();
        }
        divisor = static_cast<double>(d);
    }
    return sign * multiplier * std::numbers::pi / divisor;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fast delay Vandermonde matrix products, operation counts, error analysis and beamforming"};
    app.name("fastdvm");
    app.require_subcommand(1);

    MultiplyOptions mul;
    auto* multiply = app.add_subcommand("multiply", "Multiply a vector by the (scaled) DVM with the fast algorithm");
    multiply->add_option("--size", mul.size, "Matrix size N (power of two >= 2)")->required();
    add_node_options(multiply, mul.node, "0");
    multiply->add_flag("--scaled", mul.scaled, "Use the scaled matrix [alpha^{kl}], k = 0..N-1");
    multiply->add_option("--input", mul.input, "Vector file, one 're,im' pair per line");
    multiply->add_flag("--random", mul.random, "Use a seeded random unit-norm vector");
    multiply->add_option("--seed", mul.seed, "Random seed (default 0)");
    multiply->add_option("--precision", mul.precision)->check(CLI::IsMember({"single", "double"}));
    multiply->add_option("--format", mul.format)->check(CLI::IsMember({"csv", "json"}));
    multiply->add_flag("--raw", mul.raw, "Compute even when the node is degenerate");
    multiply->add_option("--output", mul.output, "Output file (default stdout)");

    ComplexityOptions cx;
    auto* complexity = app.add_subcommand("complexity", "Operation-count table: direct vs fast");
    complexity->add_option("--variant", cx.variant, "scaled or dvm")->check(CLI::IsMember({"scaled", "dvm"}));
    complexity->add_option("--max-size", cx.max_size, "Largest N (power of two, <= 2^20)");
    complexity->add_flag("--measured", cx.measured, "Report instrumented counts next to the closed forms");
    add_node_options(complexity, cx.node, "pi/32");
    complexity->add_option("--format", cx.format)->check(CLI::IsMember({"csv", "json"}));
    complexity->add_option("--output", cx.output, "Output file (default stdout)");

    ErrorsOptions er;
    auto* errors = app.add_subcommand("errors", "Single-vs-double forward error table");
    errors->add_option("--max-size", er.max_size, "Largest N (power of two)");
    add_node_options(errors, er.node, "pi/32");
    errors->add_option("--seed", er.seed, "Random seed (default 0)");
    errors->add_flag("--raw", er.raw, "Compute degenerate rows instead of reporting NaN");
    errors->add_option("--format", er.format)->check(CLI::IsMember({"csv", "json"}));
    errors->add_option("--output", er.output, "Output file (default stdout)");

    BoundOptions bd;
    auto* bound = app.add_subcommand("bound", "Theoretical forward-error bound and measured error");
    bound->add_option("--size", bd.size, "Matrix size N")->required();
    add_node_options(bound, bd.node, "pi/32");
    bound->add_option("--variant", bd.variant, "scaled, dvm or both")
        ->check(CLI::IsMember({"scaled", "dvm", "both"}));
    bound->add_option("--input", bd.input, "Vector file, one 're,im' pair per line");
    bound->add_flag("--random", bd.random, "Use a seeded random complex vector");
    bound->add_option("--seed", bd.seed, "Random seed (default 0)");
    bound->add_option("--c", bd.c, "Weight-error constant c in mu = c u (default 1)");
    bound->add_option("--precision", bd.precision, "Working precision of the bound (default single)")
        ->check(CLI::IsMember({"single", "double"}));
    bound->add_option("--format", bd.format)->check(CLI::IsMember({"csv", "json"}));
    bound->add_option("--output", bd.output, "Output file (default stdout)");

    BeamformOptions_ bf;
    auto* beam = app.add_subcommand("beamform", "Wideband multi-beam beamforming per temporal bin");
    beam->add_option("--antennas", bf.antennas, "Number of antennas N (power of two)");
    beam->add_option("--dft-size", bf.dft_size, "Temporal DFT size M (power of two)");
    beam->add_option("--spacing", bf.spacing, "Element spacing in meters");
    beam->add_option("--wave-speed", bf.wave_speed, "Propagation speed in m/s");
    beam->add_option("--sample-period", bf.sample_period, "Sample period T in seconds (default N*tau)");
    beam->add_option("--source-beam", bf.source_beam, "Synthesize a source matched to beam k (1..N)");
    beam->add_option("--source-direction", bf.source_direction, "Synthesize a source from direction psi (rad)");
    beam->add_option("--bins", bf.bins, "Temporal bins carrying the source (default 1)")->delimiter(',');
    beam->add_option("--amplitude", bf.amplitude, "Source amplitude");
    beam->add_option("--noise", bf.noise, "RMS complex noise per entry");
    beam->add_option("--seed", bf.seed, "Noise seed (default 0)");
    beam->add_option("--input", bf.input, "Frame file: one row per antenna, 're,im' per bin");
    beam->add_flag("--time-domain", bf.time_domain, "Input holds time samples; apply the temporal DFT first");
    beam->add_flag("--powers", bf.powers, "Emit the full N x M beam-power matrix");
    beam->add_option("--threads", bf.threads, "Worker threads (default $DVM_THREADS or 1)");
    beam->add_option("--format", bf.format)->check(CLI::IsMember({"csv", "json"}));
    beam->add_option("--output", bf.output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (multiply->parsed()) {
            return cmd_multiply(mul, out, err);
        }
        if (complexity->parsed()) {
            return cmd_complexity(cx, out);
        }
        if (errors->parsed()) {
            return cmd_errors(er, out);
        }
        if (bound->parsed()) {
            return cmd_bound(bd, out);
        }
        if (beam->parsed()) {
            return cmd_beamform(bf, out);
        }
    } catch (const CliFailure& e) {
        err << "error: " << e.what() << '\n';
        return e.code;
    } catch (const BoundInapplicableError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace fastdvm::cli
