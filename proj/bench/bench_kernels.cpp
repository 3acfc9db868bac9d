// Timing comparison of the OpenMP element-survey and Molien-series kernels
// against their serial reference implementations.  Results must agree exactly
// (everything is exact arithmetic); any divergence aborts the run.
//
// Usage: bench_kernels [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "reflgrp/reflection.hpp"

using namespace reflgrp;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_survey(const ElementSurvey& a, const ElementSurvey& b) {
  if (a.order != b.order || a.fixed_dim != b.fixed_dim || a.det_is_one != b.det_is_one ||
      a.age != b.age)
    return false;
  for (size_t i = 0; i < a.det.size(); ++i)
    if (!(a.det[i] == b.det[i])) return false;
  return true;
}

template <typename F>
double best_of(int reps, F f) {
  double best = -1;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    double t = ms_since(t0);
    if (best < 0 || t < best) best = t;
  }
  return best;
}

void bench_instance(const FamilySpec& spec, int reps) {
  FiniteMatrixGroup G = build_family(spec);
  const int precision = default_molien_precision(G);

  // Warm the shared element caches so both paths measure only kernel work.
  ElementSurvey serial_survey = survey_elements_serial(G);
  ElementSurvey par_survey = survey_elements(G, Exec::par);
  if (!same_survey(serial_survey, par_survey)) {
    std::fprintf(stderr, "survey mismatch on %s\n", spec_label(spec).c_str());
    std::exit(1);
  }
  std::vector<Rational> serial_molien = molien_series_serial(G, precision);
  std::vector<Rational> par_molien = molien_series(G, precision, Exec::par);
  if (serial_molien != par_molien) {
    std::fprintf(stderr, "molien mismatch on %s\n", spec_label(spec).c_str());
    std::exit(1);
  }

  double survey_serial = best_of(reps, [&] { survey_elements_serial(G); });
  double survey_par = best_of(reps, [&] { survey_elements(G, Exec::par); });
  double molien_serial = best_of(reps, [&] { molien_series_serial(G, precision); });
  double molien_par = best_of(reps, [&] { molien_series(G, precision, Exec::par); });

  std::printf("%-18s |G|=%4d | survey %8.2f ms -> %8.2f ms (x%.2f) | molien[%3d] %8.2f ms -> %8.2f ms (x%.2f)\n",
              spec_label(spec).c_str(), G.size(), survey_serial, survey_par,
              survey_serial / survey_par, precision, molien_serial, molien_par,
              molien_serial / molien_par);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) reps = 1;

#ifdef _OPENMP
  std::printf("openmp threads: %d, best of %d runs\n", omp_get_max_threads(), reps);
#else
  std::printf("openmp unavailable (serial build), best of %d runs\n", reps);
#endif

  bench_instance({Family::Z2cubed, 0}, reps);
  bench_instance({Family::Tetrahedral, 0}, reps);
  bench_instance({Family::Octahedral, 0}, reps);
  bench_instance({Family::DihedralxZ2, 24}, reps);
  bench_instance({Family::Icosahedral, 0}, reps);
  return 0;
}
