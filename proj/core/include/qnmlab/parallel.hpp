// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace qnmlab
{

// Worker threads used by parallel loops. Has no effect in builds without OpenMP, where
// max_threads() is always 1. Results never depend on the thread count: every parallel loop
// writes disjoint outputs.
void set_max_threads(int n);
int max_threads();

}  // namespace qnmlab
