// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/spec_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <iterator>
#include <map>
#include <optional>
#include <set>

namespace liftbank {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Diagnostic::str() const {
    std::string out;
    if (line != 0) {
        out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    }
    out += message;
    if (!path.empty()) {
        out += " [at " + path + "]";
    }
    return out;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (std::size_t i = 0; i < diagnostics.size(); ++i) {
        out += (i == 0 ? "" : "\n") + diagnostics[i].str();
    }
    return out;
}

} // namespace

SpecError::SpecError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

// ---------------------------------------------------------------------------
// Source positions. nlohmann::json keeps none, so a second SAX pass over a
// tracking iterator records the offset at which each JSON pointer's value was
// read.

struct TrackingIterator {
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    const char** high_water = nullptr;

    reference operator*() const { return *p; }
    TrackingIterator& operator++() {
        ++p;
        if (p > *high_water) {
            *high_water = p;
        }
        return *this;
    }
    TrackingIterator operator++(int) {
        TrackingIterator old = *this;
        ++*this;
        return old;
    }
    bool operator==(const TrackingIterator& other) const { return p == other.p; }
    bool operator!=(const TrackingIterator& other) const { return p != other.p; }
};

class PositionRecorder : public nlohmann::json_sax<json> {
public:
    PositionRecorder(const char* begin, const char** cursor) : begin_(begin), cursor_(cursor) {}

    std::map<std::string, std::size_t> offsets;

    bool null() override { return value(); }
    bool boolean(bool) override { return value(); }
    bool number_integer(number_integer_t) override { return value(); }
    bool number_unsigned(number_unsigned_t) override { return value(); }
    bool number_float(number_float_t, const string_t&) override { return value(); }
    bool string(string_t&) override { return value(); }
    bool binary(binary_t&) override { return value(); }
    bool start_object(std::size_t) override { return open(false); }
    bool start_array(std::size_t) override { return open(true); }
    bool key(string_t& name) override {
        frames_.back().key = escape(name);
        offsets[path()] = last_offset();
        return true;
    }
    bool end_object() override { return close(); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
        return false;
    }

private:
    struct Frame {
        bool array = false;
        std::size_t index = 0;
        std::string key;
    };

    static std::string escape(const std::string& key) {
        std::string out;
        for (const char ch : key) {
            if (ch == '~') {
                out += "~0";
            } else if (ch == '/') {
                out += "~1";
            } else {
                out += ch;
            }
        }
        return out;
    }

    std::size_t last_offset() const {
        const auto consumed = static_cast<std::size_t>(*cursor_ - begin_);
        return consumed == 0 ? 0 : consumed - 1;
    }

    std::string path() const {
        std::string out;
        for (const Frame& f : frames_) {
            out += '/';
            out += f.array ? std::to_string(f.index) : f.key;
        }
        return out;
    }

    bool value() {
        offsets[path()] = last_offset();
        advance();
        return true;
    }
    bool open(bool array) {
        offsets[path()] = last_offset();
        frames_.push_back({array, 0, {}});
        return true;
    }
    bool close() {
        frames_.pop_back();
        advance();
        return true;
    }
    void advance() {
        if (!frames_.empty() && frames_.back().array) {
            ++frames_.back().index;
        }
    }

    const char* begin_;
    const char** cursor_;
    std::vector<Frame> frames_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

class Document {
public:
    explicit Document(std::string_view text) : text_(text) {
        try {
            root_ = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
            const auto [line, column] = line_column(text, offset);
            std::string message = e.what();
            // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
            if (const auto colon = message.find(": "); colon != std::string::npos) {
                message = message.substr(colon + 2);
            }
            throw SpecError({{line, column, "", "syntax error: " + message}});
        }
        const char* cursor = text.data();
        TrackingIterator first{text.data(), &cursor};
        TrackingIterator last{text.data() + text.size(), &cursor};
        PositionRecorder recorder(text.data(), &cursor);
        json::sax_parse(first, last, &recorder);
        offsets_ = std::move(recorder.offsets);
    }

    const json& root() const noexcept { return root_; }

    void fail(const std::string& path, std::string message) {
        std::string probe = path;
        auto it = offsets_.find(probe);
        while (it == offsets_.end() && !probe.empty()) {
            probe.erase(probe.rfind('/'));
            it = offsets_.find(probe);
        }
        std::size_t line = 0;
        std::size_t column = 0;
        if (it != offsets_.end()) {
            std::tie(line, column) = line_column(text_, it->second);
        }
        diagnostics_.push_back({line, column, path, std::move(message)});
    }

    bool ok() const noexcept { return diagnostics_.empty(); }

    void throw_if_failed() {
        if (!diagnostics_.empty()) {
            throw SpecError(std::move(diagnostics_));
        }
    }

private:
    std::string_view text_;
    json root_;
    std::map<std::string, std::size_t> offsets_;
    std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// Field readers. Each reports into the document and returns nullopt on error.

std::optional<Scalar> read_scalar(Document& doc, const json& value, const std::string& path, Arithmetic mode) {
    try {
        if (value.is_string()) {
            return parse_scalar(value.get<std::string>(), mode);
        }
        if (value.is_number_integer()) {
            return parse_scalar(value.dump(), mode);
        }
        if (value.is_number_float()) {
            if (mode == Arithmetic::Exact) {
                doc.fail(path, "JSON decimal numbers are inexact in exact mode; write the value as a string");
                return std::nullopt;
            }
            return Scalar::real(value.get<double>());
        }
    } catch (const DomainError& e) {
        doc.fail(path, e.what());
        return std::nullopt;
    }
    doc.fail(path, "expected a number or a numeric string");
    return std::nullopt;
}

std::optional<std::int64_t> read_integer(Document& doc, const json& value, const std::string& path) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            doc.fail(path, "integer out of range");
            return std::nullopt;
        }
        return value.get<std::int64_t>();
    }
    doc.fail(path, "expected an integer");
    return std::nullopt;
}

void reject_unknown_keys(Document& doc, const json& object, const std::string& path,
                         std::initializer_list<std::string_view> known) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (const std::string_view k : known) {
            found = found || item.key() == k;
        }
        if (!found) {
            doc.fail(path + "/" + item.key(), "unknown field '" + item.key() + "'");
        }
    }
}

struct TapRef {
    std::int64_t index;
    std::string path; // of the coefficient
};

std::optional<LaurentPoly> read_taps(Document& doc, const json& value, const std::string& path, Arithmetic mode,
                                     std::vector<TapRef>* refs = nullptr) {
    if (!value.is_array()) {
        doc.fail(path, "expected an array of taps");
        return std::nullopt;
    }
    LaurentPoly poly(mode);
    std::set<std::int64_t> seen;
    bool ok = true;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string tap_path = path + "/" + std::to_string(i);
        const json& tap = value[i];
        if (!tap.is_object()) {
            doc.fail(tap_path, "expected a tap object {\"n\": <int>, \"c\": <scalar>}");
            ok = false;
            continue;
        }
        reject_unknown_keys(doc, tap, tap_path, {"n", "c"});
        if (!tap.contains("n") || !tap.contains("c")) {
            doc.fail(tap_path, "tap needs both \"n\" and \"c\"");
            ok = false;
            continue;
        }
        const auto index = read_integer(doc, tap["n"], tap_path + "/n");
        const auto coefficient = read_scalar(doc, tap["c"], tap_path + "/c", mode);
        if (!index || !coefficient) {
            ok = false;
            continue;
        }
        if (!seen.insert(*index).second) {
            doc.fail(tap_path + "/n", "duplicate tap index " + std::to_string(*index));
            ok = false;
            continue;
        }
        poly.set(*index, *coefficient);
        if (refs != nullptr) {
            refs->push_back({*index, tap_path + "/c"});
        }
    }
    if (!ok) {
        return std::nullopt;
    }
    return poly;
}

std::optional<PolyphaseMatrix> read_matrix(Document& doc, const json& value, const std::string& path,
                                           Arithmetic mode) {
    const auto bad_shape = [&] {
        doc.fail(path, "expected a 2x2 array of tap lists");
        return std::nullopt;
    };
    if (!value.is_array() || value.size() != 2) {
        return bad_shape();
    }
    std::optional<LaurentPoly> entries[2][2];
    bool ok = true;
    for (std::size_t r = 0; r < 2; ++r) {
        if (!value[r].is_array() || value[r].size() != 2) {
            return bad_shape();
        }
        for (std::size_t c = 0; c < 2; ++c) {
            entries[r][c] = read_taps(doc, value[r][c], path + "/" + std::to_string(r) + "/" + std::to_string(c), mode);
            ok = ok && entries[r][c].has_value();
        }
    }
    if (!ok) {
        return std::nullopt;
    }
    return PolyphaseMatrix{*entries[0][0], *entries[0][1], *entries[1][0], *entries[1][1]};
}

std::optional<Arithmetic> read_arithmetic(Document& doc, const json& root) {
    if (!root.contains("arithmetic")) {
        return Arithmetic::Exact;
    }
    const json& value = root["arithmetic"];
    if (value == "exact") {
        return Arithmetic::Exact;
    }
    if (value == "float") {
        return Arithmetic::Float;
    }
    doc.fail("/arithmetic", "arithmetic must be \"exact\" or \"float\"");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Writers

ordered_json taps_json(const LaurentPoly& p) {
    ordered_json taps = ordered_json::array();
    for (const auto& [index, value] : p.taps()) {
        ordered_json tap;
        tap["n"] = index;
        tap["c"] = value.str();
        taps.push_back(std::move(tap));
    }
    return taps;
}

ordered_json matrix_json(const PolyphaseMatrix& m) {
    return ordered_json::array({ordered_json::array({taps_json(m.h00), taps_json(m.h01)}),
                                ordered_json::array({taps_json(m.h10), taps_json(m.h11)})});
}

} // namespace

LiftingCascade parse_spec(std::string_view text) {
    Document doc(text);
    const json& root = doc.root();
    if (!root.is_object()) {
        doc.fail("", "spec document must be a JSON object");
        doc.throw_if_failed();
    }
    reject_unknown_keys(doc, root, "", {"mode", "arithmetic", "k", "rounding", "steps", "base"});

    bool reversible = false;
    if (!root.contains("mode")) {
        doc.fail("", "missing field \"mode\" (\"reversible\" or \"irreversible\")");
    } else if (root["mode"] == "reversible") {
        reversible = true;
    } else if (root["mode"] != "irreversible") {
        doc.fail("/mode", "mode must be \"reversible\" or \"irreversible\"");
    }

    const std::optional<Arithmetic> arithmetic = read_arithmetic(doc, root);
    const Arithmetic mode = arithmetic.value_or(Arithmetic::Exact);

    std::optional<Scalar> k = Scalar::one(mode);
    if (root.contains("k")) {
        k = read_scalar(doc, root["k"], "/k", mode);
        if (k && k->is_zero()) {
            doc.fail("/k", "scaling factor K must be nonzero");
        }
    }

    RoundingRule rounding = RoundingRule::HalfUp;
    if (root.contains("rounding")) {
        const json& value = root["rounding"];
        const auto rule = value.is_string() ? parse_rounding_rule(value.get<std::string>()) : std::nullopt;
        if (rule) {
            rounding = *rule;
        } else {
            doc.fail("/rounding", "unknown rounding rule (expected half-up, half-down, half-even, floor, ceil or truncate)");
        }
    }

    std::vector<LiftingStep> steps;
    std::vector<std::vector<TapRef>> tap_refs;
    if (!root.contains("steps")) {
        doc.fail("", "missing field \"steps\"");
    } else if (!root["steps"].is_array()) {
        doc.fail("/steps", "steps must be an array");
    } else {
        const json& list = root["steps"];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = "/steps/" + std::to_string(i);
            const json& step = list[i];
            if (!step.is_object()) {
                doc.fail(path, "expected a step object {\"update\": 0|1, \"taps\": [...]}");
                continue;
            }
            reject_unknown_keys(doc, step, path, {"update", "taps"});
            std::optional<Update> update;
            if (!step.contains("update")) {
                doc.fail(path, "step needs \"update\" (0 = lowpass, 1 = highpass)");
            } else if (step["update"] == 0) {
                update = Update::Lowpass;
            } else if (step["update"] == 1) {
                update = Update::Highpass;
            } else {
                doc.fail(path + "/update", "update must be 0 (lowpass) or 1 (highpass)");
            }
            std::optional<LaurentPoly> filter;
            std::vector<TapRef> refs;
            if (!step.contains("taps")) {
                doc.fail(path, "step needs \"taps\"");
            } else {
                filter = read_taps(doc, step["taps"], path + "/taps", mode, &refs);
                if (filter && filter->is_zero()) {
                    doc.fail(path + "/taps", "step " + std::to_string(i) + " has a zero filter (an identity step)");
                    filter.reset();
                }
            }
            if (update && filter) {
                steps.emplace_back(*update, std::move(*filter));
                tap_refs.push_back(std::move(refs));
            }
        }
    }

    std::optional<PolyphaseMatrix> base;
    if (root.contains("base")) {
        base = read_matrix(doc, root["base"], "/base", mode);
        if (base && !approx_equal(determinant(*base), LaurentPoly::constant(Scalar::one(mode)))) {
            doc.fail("/base", "base matrix determinant is " + determinant(*base).str() + ", not 1");
        }
    }

    if (reversible && arithmetic) {
        if (mode != Arithmetic::Exact) {
            doc.fail("/arithmetic", "reversible cascades require exact arithmetic");
        } else {
            if (k && !k->is_one()) {
                doc.fail("/k", "reversible cascades require K = 1, got K = " + k->str());
            }
            for (std::size_t i = 0; i < steps.size(); ++i) {
                for (const TapRef& ref : tap_refs[i]) {
                    const Scalar c = steps[i].filter.coefficient(ref.index);
                    if (!c.is_zero() && !c.is_dyadic()) {
                        doc.fail(ref.path, "non-dyadic coefficient " + c.str() + " in reversible cascade");
                    }
                }
            }
        }
        if (root.contains("base")) {
            doc.fail("/base", "reversible cascades cannot have a base matrix");
        }
    }

    doc.throw_if_failed();
    LiftingCascade::Options options;
    options.base = std::move(base);
    options.reversible = reversible;
    options.rounding = rounding;
    return LiftingCascade(std::move(steps), *k, std::move(options));
}

std::string serialize_spec(const LiftingCascade& cascade) {
    ordered_json doc;
    doc["mode"] = cascade.reversible() ? "reversible" : "irreversible";
    doc["arithmetic"] = to_string(cascade.mode());
    doc["k"] = cascade.k().str();
    if (cascade.reversible()) {
        doc["rounding"] = to_string(cascade.rounding());
    }
    ordered_json steps = ordered_json::array();
    for (const LiftingStep& step : cascade.steps()) {
        ordered_json s;
        s["update"] = index_of(step.update);
        s["taps"] = taps_json(step.filter);
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    if (cascade.base()) {
        doc["base"] = matrix_json(*cascade.base());
    }
    return doc.dump(2) + "\n";
}

PolyphaseMatrix parse_matrix(std::string_view text) {
    Document doc(text);
    const json& root = doc.root();
    std::optional<PolyphaseMatrix> matrix;
    if (root.is_array()) {
        matrix = read_matrix(doc, root, "", Arithmetic::Exact);
    } else if (root.is_object()) {
        reject_unknown_keys(doc, root, "", {"arithmetic", "matrix"});
        const auto mode = read_arithmetic(doc, root);
        if (!root.contains("matrix")) {
            doc.fail("", "missing field \"matrix\"");
        } else if (mode) {
            matrix = read_matrix(doc, root["matrix"], "/matrix", *mode);
        }
    } else {
        doc.fail("", "matrix document must be a JSON object or a 2x2 array");
    }
    doc.throw_if_failed();
    return *matrix;
}

std::string serialize_matrix(const PolyphaseMatrix& matrix) {
    ordered_json doc;
    doc["arithmetic"] = to_string(matrix.mode());
    doc["matrix"] = matrix_json(matrix);
    return doc.dump(2) + "\n";
}

namespace {

template <typename Parse>
auto parse_lines(std::string_view text, Parse parse) {
    using Sample = typename decltype(parse(std::string_view{}))::value_type;
    std::vector<Sample> samples;
    std::vector<Diagnostic> problems;
    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
            line.remove_prefix(1);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (auto sample = parse(line)) {
            samples.push_back(*sample);
        } else {
            problems.push_back({line_number, 1, "", "invalid sample '" + std::string(line) + "'"});
        }
    }
    if (!problems.empty()) {
        throw SpecError(std::move(problems));
    }
    return samples;
}

} // namespace

std::vector<std::int64_t> parse_integer_signal(std::string_view text) {
    return parse_lines(text, [](std::string_view line) -> std::optional<std::int64_t> {
        std::int64_t value = 0;
        const char* first = line.data();
        if (line.front() == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
        if (ec != std::errc() || ptr != line.data() + line.size()) {
            return std::nullopt;
        }
        return value;
    });
}

std::vector<double> parse_real_signal(std::string_view text) {
    return parse_lines(text, [](std::string_view line) -> std::optional<double> {
        double value = 0;
        const char* first = line.data();
        if (line.front() == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
        if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(value)) {
            return std::nullopt;
        }
        return value;
    });
}

std::string format_signal(const std::vector<std::int64_t>& samples) {
    std::string out;
    for (const std::int64_t s : samples) {
        out += std::to_string(s);
        out += '\n';
    }
    return out;
}

std::string format_signal(const std::vector<double>& samples) {
    std::string out;
    char buffer[64];
    for (const double s : samples) {
        const auto result = std::to_chars(buffer, buffer + sizeof buffer, s == 0.0 ? 0.0 : s);
        out.append(buffer, result.ptr);
        out += '\n';
    }
    return out;
}

} // namespace liftbank
