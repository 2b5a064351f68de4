// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/cli.hpp"

#include "liftbank/factorization.hpp"
#include "liftbank/normalization.hpp"
#include "liftbank/report.hpp"
#include "liftbank/rescaling.hpp"
#include "liftbank/spec_io.hpp"
#include "liftbank/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iterator>
#include <sstream>

namespace liftbank {

namespace {

/// Input/output failure; maps to exit status 2.
class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << content)) {
        throw IoError("cannot write '" + path + "'");
    }
}

LiftingCascade load_spec(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_spec(text);
    } catch (const SpecError& e) {
        std::string message;
        for (const Diagnostic& d : e.diagnostics()) {
            message += (message.empty() ? "" : "\n") + path + ":" + d.str();
        }
        throw IoError(message);
    }
}

ReportFormat parse_format(const std::string& name) {
    return name == "json" ? ReportFormat::Json : ReportFormat::Text;
}

struct Options {
    std::string format = "text";
    std::string output;

    std::string spec;
    std::vector<std::string> specs;
    std::string kappa;
    std::string other;
    std::string direction;
    std::string signal;
    std::string matrix;
    std::string reduction = "high-end";
    std::string first = "lowpass";
};

int cmd_analyze(const Options& o, std::ostream& out) {
    const LiftingCascade cascade = load_spec(o.spec);
    out << render_analysis(analyze(cascade), parse_format(o.format));
    return kExitSuccess;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    // Files are independent, so they are checked concurrently and reported
    // in command-line order.
    std::vector<std::future<ComplianceReport>> pending;
    pending.reserve(o.specs.size());
    for (const std::string& path : o.specs) {
        pending.push_back(std::async(std::launch::async, [path] { return check_part2(load_spec(path)); }));
    }
    std::vector<ComplianceReport> reports;
    for (auto& f : pending) {
        reports.push_back(f.get());
    }
    const ReportFormat format = parse_format(o.format);
    int status = kExitSuccess;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const ComplianceReport& r = reports[i];
        const std::string& path = o.specs[i];
        if (format == ReportFormat::Json) {
            out << render_compliance(r, format);
        } else {
            out << path << ": " << to_string(r.verdict) << (r.tolerance_qualified ? " (within tolerance 1e-9)" : "")
                << '\n';
        }
        for (const std::string& reason : r.reasons) {
            err << path << ": " << reason << '\n';
        }
        if (r.verdict != Verdict::Compliant) {
            status = kExitNegative;
        }
    }
    return status;
}

int cmd_rescale(const Options& o, std::ostream& out) {
    const LiftingCascade cascade = load_spec(o.spec);
    Scalar kappa;
    try {
        kappa = parse_scalar(o.kappa, cascade.mode());
    } catch (const DomainError& e) {
        throw IoError(std::string("--kappa: ") + e.what());
    }
    write_output(o.output, serialize_spec(rescale_cascade(cascade, kappa)), out);
    return kExitSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const LiftingCascade a = load_spec(o.spec);
    const LiftingCascade b = load_spec(o.other);
    const RescalingWitness w = find_rescaling(a, b);
    if (parse_format(o.format) == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["relation"] = to_string(w.relation);
        j["kappa"] = w.kappa ? nlohmann::ordered_json(w.kappa->str()) : nlohmann::ordered_json(nullptr);
        j["reason"] = w.reason;
        out << j.dump(2) << '\n';
    } else {
        switch (w.relation) {
        case Relation::Identical: out << "identical\n"; break;
        case Relation::EquivalentModuloRescaling:
            out << "equivalent modulo rescaling, kappa = " << w.kappa->str() << '\n';
            break;
        case Relation::Inequivalent: out << "inequivalent: " << w.reason << '\n'; break;
        }
    }
    return w.relation == Relation::Inequivalent ? kExitNegative : kExitSuccess;
}

int cmd_transform(const Options& o, std::ostream& out) {
    const LiftingCascade cascade = load_spec(o.spec);
    const std::string text = read_file(o.signal);
    const bool analyze_direction = o.direction == "analyze";
    std::string result;
    if (cascade.reversible()) {
        const std::vector<std::int64_t> samples = parse_integer_signal(text);
        if (analyze_direction) {
            const auto bands = analyze_signal(cascade, std::span<const std::int64_t>(samples));
            std::vector<std::int64_t> packed = bands.lowpass;
            packed.insert(packed.end(), bands.highpass.begin(), bands.highpass.end());
            result = format_signal(packed);
        } else {
            if (samples.size() % 2 != 0) {
                throw DomainError("subband file must hold an even number of samples");
            }
            const auto half = static_cast<std::ptrdiff_t>(samples.size() / 2);
            const SubbandPair<std::int64_t> bands{{samples.begin(), samples.begin() + half},
                                                  {samples.begin() + half, samples.end()}};
            result = format_signal(synthesize_signal(cascade, bands));
        }
    } else {
        const std::vector<double> samples = parse_real_signal(text);
        if (analyze_direction) {
            const auto bands = analyze_signal(cascade, std::span<const double>(samples));
            std::vector<double> packed = bands.lowpass;
            packed.insert(packed.end(), bands.highpass.begin(), bands.highpass.end());
            result = format_signal(packed);
        } else {
            if (samples.size() % 2 != 0) {
                throw DomainError("subband file must hold an even number of samples");
            }
            const auto half = static_cast<std::ptrdiff_t>(samples.size() / 2);
            const SubbandPair<double> bands{{samples.begin(), samples.begin() + half},
                                            {samples.begin() + half, samples.end()}};
            result = format_signal(synthesize_signal(cascade, bands));
        }
    }
    write_output(o.output, result, out);
    return kExitSuccess;
}

int cmd_factor(const Options& o, std::ostream& out) {
    const PolyphaseMatrix matrix = parse_matrix(read_file(o.matrix));
    FactorStrategy strategy;
    strategy.reduction = parse_reduction(o.reduction).value();
    strategy.first_channel = parse_first_channel(o.first).value();
    write_output(o.output, serialize_spec(factor_lifting(matrix, strategy)), out);
    return kExitSuccess;
}

int cmd_renormalize(const Options& o, std::ostream& out, std::ostream& err) {
    const RenormalizeResult result = renormalize(load_spec(o.spec));
    for (const std::string& note : result.diagnostics) {
        err << o.spec << ": " << note << '\n';
    }
    write_output(o.output, serialize_spec(result.cascade), out);
    return kExitSuccess;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lifting factorizations of two-channel FIR filter banks"};
    app.name("liftbank");
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"text", "json"};

    auto* analyze_cmd = app.add_subcommand("analyze", "Report filters, DC/Nyquist responses, B sequence and compliance");
    analyze_cmd->add_option("spec", o.spec, "Filter-bank spec file")->required();
    analyze_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

    auto* validate_cmd = app.add_subcommand("validate", "Exit 0 iff every spec meets the Part 2 normalization");
    validate_cmd->add_option("specs", o.specs, "Filter-bank spec files")->required();
    validate_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

    auto* rescale_cmd = app.add_subcommand("rescale", "Write the spec rescaled by kappa");
    rescale_cmd->add_option("spec", o.spec, "Filter-bank spec file")->required();
    rescale_cmd->add_option("--kappa", o.kappa, "Rescaling factor, e.g. 2 or 3/2")->required();
    rescale_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* compare_cmd = app.add_subcommand("compare", "Decide whether two factorizations are equivalent modulo rescaling");
    compare_cmd->add_option("a", o.spec, "First spec")->required();
    compare_cmd->add_option("b", o.other, "Second spec")->required();
    compare_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

    auto* transform_cmd = app.add_subcommand("transform", "Run one analysis or synthesis level on a signal file");
    transform_cmd->add_option("--direction", o.direction, "analyze or synthesize")
        ->required()
        ->check(CLI::IsMember({"analyze", "synthesize"}));
    transform_cmd->add_option("spec", o.spec, "Filter-bank spec file")->required();
    transform_cmd->add_option("signal", o.signal, "Signal file, one sample per line")->required();
    transform_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* factor_cmd = app.add_subcommand("factor", "Factor a unit-determinant polyphase matrix into lifting steps");
    factor_cmd->add_option("matrix", o.matrix, "Matrix file")->required();
    factor_cmd->add_option("--reduction", o.reduction, "Support end cancelled by each division")
        ->check(CLI::IsMember({"high-end", "low-end"}));
    factor_cmd->add_option("--first", o.first, "Entry reduced first on ties")
        ->check(CLI::IsMember({"lowpass", "highpass"}));
    factor_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* renormalize_cmd = app.add_subcommand("renormalize", "Set K to the lowpass DC response E_0(1)");
    renormalize_cmd->add_option("spec", o.spec, "Filter-bank spec file")->required();
    renormalize_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitFailure;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(o, out);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(o, out, err);
        }
        if (rescale_cmd->parsed()) {
            return cmd_rescale(o, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(o, out);
        }
        if (transform_cmd->parsed()) {
            return cmd_transform(o, out);
        }
        if (factor_cmd->parsed()) {
            return cmd_factor(o, out);
        }
        if (renormalize_cmd->parsed()) {
            return cmd_renormalize(o, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace liftbank
