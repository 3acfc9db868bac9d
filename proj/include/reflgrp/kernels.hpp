#pragma once

#include <atomic>
#include <exception>

#include "reflgrp/group.hpp"

namespace reflgrp {

enum class Exec { seq, par };

// Run body(i) for i in [0, n), parallel when requested, capturing the first
// exception (OpenMP regions must not leak exceptions).
template <typename F>
void for_each_index(long long n, Exec mode, F body) {
  if (mode == Exec::seq) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(i);
    } catch (...) {
#pragma omp critical(reflgrp_kernel_err)
      {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

// Survey every element: order, determinant, cross-checked fixed dimension,
// and age where det = 1.  Power chains are walked once per cyclic subgroup
// and the per-element work runs under OpenMP when mode == par.
ElementSurvey survey_elements(const FiniteMatrixGroup& G, Exec mode = Exec::par);

// Plain reference: every element handled independently with the single-matrix
// routines, no chain sharing, no parallelism.  Kept for testing against the
// kernel above.
ElementSurvey survey_elements_serial(const FiniteMatrixGroup& G);

}  // namespace reflgrp
