// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uwake::cli {

enum ExitCode : int {
    kOk = 0,
    kFlagError = 2,
    kNoSolution = 3,
    kValidationError = 4,
};

/// Entry point for `uwake <sweep-range|lifetime|simulate> ...`. `args` excludes
/// the program name. Errors print one line `error: <code>: <detail>` to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uwake::cli
