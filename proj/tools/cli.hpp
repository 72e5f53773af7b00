// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace qnmlab::cli
{

enum ExitCode : int
{
  kSuccess = 0,
  kConfigError = 1,
  kNoConvergence = 2,
};

// Runs one qnmlab invocation (argv[0] is the program name). Diagnostics go to `err`, the
// list of written artifacts to `out`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qnmlab::cli
