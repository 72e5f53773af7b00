// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/parallel.hpp"

#include <stdexcept>

#ifdef QNMLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace qnmlab
{

void set_max_threads(int n)
{
  if (n < 1)
  {
    throw std::invalid_argument("thread count must be positive");
  }
#ifdef QNMLAB_HAVE_OPENMP
  omp_set_num_threads(n);
#endif
}

int max_threads()
{
#ifdef QNMLAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qnmlab
