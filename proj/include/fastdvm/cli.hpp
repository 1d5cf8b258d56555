// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fastdvm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kDegenerate = 3,
    kIo = 4,
};

/// Parses an angle: `<float>`, `pi`, `pi/<int>`, `<float>pi`, `<float>*pi/<int>`, with optional sign.
double parse_angle(std::string_view text);

/// Runs the command line `args` (without the program name). All output goes
/// to `out` unless `--output` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fastdvm::cli
