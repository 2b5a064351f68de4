// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_SPEC_IO_HPP
#define LIFTBANK_SPEC_IO_HPP

#include "liftbank/error.hpp"
#include "liftbank/lifting.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liftbank {

/// A located problem in an input document. `line` and `column` are 1-based;
/// `path` is a JSON pointer ("/steps/1/taps/0/c"), empty for syntax errors.
struct Diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string path;
    std::string message;

    std::string str() const;
};

/// Raised when a document does not parse or does not describe a valid
/// object. Carries every problem found, not only the first.
class SpecError : public Error {
public:
    explicit SpecError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Filter-bank spec documents are JSON:
//
//   {
//     "mode": "reversible" | "irreversible",
//     "arithmetic": "exact" | "float",          (default "exact")
//     "k": "<scalar>",                          (default "1")
//     "rounding": "half-up" | ...,              (default "half-up")
//     "steps": [ {"update": 0|1, "taps": [ {"n": <int>, "c": "<scalar>"} ]} ],
//     "base": [[<taps>, <taps>], [<taps>, <taps>]]   (optional)
//   }
//
// Scalars are strings ("-1/2", "0.25") so exact values survive; JSON
// integers are also accepted, and JSON decimals only in float mode.
// Tap index n multiplies z^(-n).

LiftingCascade parse_spec(std::string_view text);

/// Canonical form: fixed key order, taps sorted by index, zero taps
/// dropped, two-space indentation, trailing newline.
std::string serialize_spec(const LiftingCascade& cascade);

/// Matrix documents: {"arithmetic": "exact", "matrix": [[<taps>, <taps>],
/// [<taps>, <taps>]]}, or the bare 2x2 array (exact mode).
PolyphaseMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const PolyphaseMatrix& matrix);

/// One sample per line; blank lines are ignored. SpecError names the line.
std::vector<std::int64_t> parse_integer_signal(std::string_view text);
std::vector<double> parse_real_signal(std::string_view text);
/// LF-terminated lines; doubles use the shortest round-trip form.
std::string format_signal(const std::vector<std::int64_t>& samples);
std::string format_signal(const std::vector<double>& samples);

} // namespace liftbank

#endif
