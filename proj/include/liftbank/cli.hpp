// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_CLI_HPP
#define LIFTBANK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace liftbank {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitNegative = 1, ///< non-compliant, inequivalent
    kExitFailure = 2,  ///< usage, I/O or parse failure
};

/// Runs the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liftbank

#endif
