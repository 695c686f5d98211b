// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddi::cli {

enum ExitCode : int {
  kOk = 0,
  kFail = 1,
  kUsage = 2,
  kError = 3,
};

/// Runs one `ddi` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ddi::cli
