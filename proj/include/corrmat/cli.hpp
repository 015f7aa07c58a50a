// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace corrmat {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Entry point of the `corrmat` tool: subcommands sample, density, validate
/// and bench. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace corrmat
