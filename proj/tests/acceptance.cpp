// Acceptance gate: the seven headline checks, one pass/fail line each.
// Every comparison is exact (integer/rational equality, no tolerances).

#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "reflgrp/reflection.hpp"
#include "reflgrp/sodcalc.hpp"
#include "reflgrp/toric.hpp"

using namespace reflgrp;

namespace {

bool expect(bool cond, const std::string& what) {
  if (!cond) std::fprintf(stderr, "  fail: %s\n", what.c_str());
  return cond;
}

FiniteMatrixGroup family_group(Family f, int n = 0) { return build_family({f, n}); }

// 1. Group and rotation-subgroup orders.
bool orders_criterion() {
  bool ok = true;
  ok &= expect(family_group(Family::Z2cubed).size() == 8, "z2cubed order");
  struct Row {
    Family f;
    int order;
    int sl_order;
  };
  for (const Row& r : {Row{Family::Tetrahedral, 24, 12}, Row{Family::Octahedral, 48, 24},
                       Row{Family::Icosahedral, 120, 60}}) {
    FiniteMatrixGroup G = family_group(r.f);
    ok &= expect(G.size() == r.order, family_name(r.f) + " order");
    ok &= expect(sl_part(G).size() == r.sl_order, family_name(r.f) + " rotation subgroup order");
  }
  for (int n = 3; n <= 30; ++n)
    ok &= expect(family_group(Family::DihedralxZ2, n).size() == 4 * n,
                 "dihedral_x_z2(" + std::to_string(n) + ") order 4n");
  return ok;
}

// 2. Conjugacy class counts by fixed dimension.
bool profiles_criterion() {
  bool ok = true;
  struct Row {
    Family f;
    std::vector<int> profile;
  };
  for (const Row& r : {Row{Family::Tetrahedral, {1, 2, 1, 1}}, Row{Family::Octahedral, {3, 4, 2, 1}},
                       Row{Family::Icosahedral, {4, 4, 1, 1}}, Row{Family::Z2cubed, {1, 3, 3, 1}}})
    ok &= expect(fixed_dim_profile(family_group(r.f)) == r.profile,
                 family_name(r.f) + " fixed-dim profile");
  for (int n = 3; n <= 30; ++n) {
    std::vector<int> want = n % 2 ? std::vector<int>{(n - 1) / 2, (n + 1) / 2, 2, 1}
                                  : std::vector<int>{n / 2, (n + 4) / 2, 3, 1};
    ok &= expect(fixed_dim_profile(family_group(Family::DihedralxZ2, n)) == want,
                 "dihedral_x_z2(" + std::to_string(n) + ") fixed-dim profile");
  }
  return ok;
}

// 3. Decomposition pipeline output equals the class-count prediction.
bool pipeline_criterion() {
  bool ok = true;
  std::vector<FamilySpec> jobs{{Family::Z2cubed, 0},
                               {Family::Tetrahedral, 0},
                               {Family::Octahedral, 0},
                               {Family::Icosahedral, 0},
                               {Family::Z2xZ2, 0}};
  for (int n = 3; n <= 30; ++n) {
    jobs.push_back({Family::DihedralxZ2, n});
    jobs.push_back({Family::DihedralRank2, n});
  }
  for (const FamilySpec& spec : jobs) {
    FamilyVerdict v = verify_family(spec);
    ok &= expect(v.match, spec_label(spec) + " constructed = predicted");
    ok &= expect(v.total_equals_class_count, spec_label(spec) + " total = class count");
  }
  return ok;
}

// 4. Reflection counts, reflection classes, discriminant components.
bool reflection_criterion() {
  bool ok = true;
  struct Row {
    Family f;
    int reflections;
    int classes;
  };
  for (const Row& r : {Row{Family::Z2cubed, 3, 3}, Row{Family::Tetrahedral, 6, 1},
                       Row{Family::Octahedral, 9, 2}, Row{Family::Icosahedral, 15, 1}}) {
    ReflectionReport rep = analyze(family_group(r.f));
    ok &= expect(rep.is_reflection_group, family_name(r.f) + " generated by reflections");
    ok &= expect(rep.reflection_count == r.reflections, family_name(r.f) + " reflection count");
    ok &= expect(rep.reflection_class_count == r.classes,
                 family_name(r.f) + " reflection class count");
    ok &= expect(rep.discriminant_component_count == r.classes,
                 family_name(r.f) + " discriminant components");
  }
  for (int n = 3; n <= 30; ++n) {
    ReflectionReport rep = analyze(family_group(Family::DihedralxZ2, n));
    int want_classes = n % 2 ? 2 : 3;
    std::string label = "dihedral_x_z2(" + std::to_string(n) + ") ";
    ok &= expect(rep.reflection_count == n + 1, label + "reflection count n+1");
    ok &= expect(rep.reflection_class_count == want_classes, label + "reflection class count");
    ok &= expect(rep.discriminant_component_count == want_classes,
                 label + "discriminant components");
  }
  return ok;
}

// 5. Degree identities: product of degrees = order, sum of (d-1) = reflections.
bool degrees_criterion() {
  bool ok = true;
  std::vector<FamilySpec> jobs;
  for (Family f : all_families()) {
    if (!family_takes_n(f)) {
      jobs.push_back({f, 0});
      continue;
    }
    for (int n = 3; n <= 12; ++n) jobs.push_back({f, n});
    jobs.push_back({f, 21});
    jobs.push_back({f, 30});
  }
  for (const FamilySpec& spec : jobs) {
    FiniteMatrixGroup G = build_family(spec);
    std::vector<int> degrees = invariant_degrees(G);
    long long prod = 1;
    int dsum = 0;
    for (int d : degrees) {
      prod *= d;
      dsum += d - 1;
    }
    ok &= expect(prod == G.size(), spec_label(spec) + " degree product = order");
    ok &= expect(dsum == static_cast<int>(pseudoreflections(G).size()),
                 spec_label(spec) + " degree sum = reflection count");
  }
  ok &= expect(invariant_degrees(family_group(Family::Tetrahedral)) == std::vector<int>{2, 3, 4},
               "tetrahedral degrees 2,3,4");
  return ok;
}

// 6. Toric smoothness, lattice indices, crepancy.
bool toric_criterion() {
  bool ok = true;
  Fan fig = figure_fan();
  Fan medial = medial_fan();
  for (const Fan& f : {fig, medial}) ok &= expect(fan_is_valid(f), "fan validity");

  ok &= expect(check_fan(fig, RefinedLattice::half_sum_even()).smooth,
               "corner refinement smooth in the sum-even half lattice");
  ok &= expect(check_fan(fig, RefinedLattice::half()).smooth,
               "corner refinement smooth in the full half lattice");

  auto [yk_fan, yk_lattice] = builtin_toric_case(ToricCase::YK_tetra);
  FanReport yk = check_fan(yk_fan, yk_lattice);
  ok &= expect(yk_fan.max_cones.size() == 4, "four top-dimensional cones");
  ok &= expect(yk.smooth, "medial refinement smooth in the index-2 sublattice");
  ok &= expect(yk.crepant.has_value() && *yk.crepant, "medial refinement crepant");

  FanReport quot = check_fan(medial, RefinedLattice::half());
  ok &= expect(!quot.smooth && quot.singular_cones.size() == 1,
               "exactly one singular cone in the full half lattice");
  ok &= expect(quot.per_cone_indices[quot.singular_cones[0]] == 2, "singular cone has index 2");
  return ok;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// 7. Cross-method agreement, age bounds, junior counts, field axioms.
bool property_criterion() {
  bool ok = true;

  std::vector<FamilySpec> jobs;
  for (Family f : all_families()) {
    if (family_takes_n(f))
      for (int n : {3, 4, 5, 6, 7, 12}) jobs.push_back({f, n});
    else
      jobs.push_back({f, 0});
  }
  for (const FamilySpec& spec : jobs) {
    FiniteMatrixGroup G = build_family(spec);
    bool agree = true;
    for (int i = 0; i < G.size(); ++i) {
      const SquareMatrix& g = G.element(i);
      auto [order, traces] = order_and_traces(g, FiniteMatrixGroup::kDefaultMaxOrder);
      agree = agree && detail::kernel_rank_dim(g) ==
                           detail::fixed_dim_from_traces(G.rank(), order, traces);
    }
    ok &= expect(agree, spec_label(spec) + " fixed-dim methods agree on every element");

    FiniteMatrixGroup H = sl_part(G);
    ElementSurvey s = H.survey();
    bool ages_ok = true;
    for (int i = 0; i < H.size(); ++i) {
      bool is_id = H.element(i).is_identity();
      ages_ok = ages_ok && (is_id ? s.age[i] == 0 : s.age[i] == 1);
    }
    ok &= expect(ages_ok, spec_label(spec) + " rotation ages in {0,1}, 0 only at identity");
  }

  ok &= expect(junior_class_count(sl_part(family_group(Family::Octahedral))) == 4,
               "octahedral rotation subgroup has 4 junior classes");
  ok &= expect(junior_class_count(sl_part(family_group(Family::Icosahedral))) == 4,
               "icosahedral rotation subgroup has 4 junior classes");

  std::minstd_rand rng(20260814);
  const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
  auto random_cyc = [&]() {
    int n = conductors[rng() % 8];
    std::vector<Rational> c(euler_phi(n));
    for (Rational& x : c)
      x = Rational(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 3) + 1);
    return CycNumber::from_coeffs(n, c);
  };
  bool axioms = true;
  for (int trial = 0; trial < 60; ++trial) {
    CycNumber a = random_cyc(), b = random_cyc(), c = random_cyc();
    axioms = axioms && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c);
    axioms = axioms && a + b == b + a && a * b == b * a;
    axioms = axioms && a * (b + c) == a * b + a * c;
    axioms = axioms && a + CycNumber(0) == a && a * CycNumber(1) == a && a - a == CycNumber(0);
    if (!a.is_zero()) axioms = axioms && a * a.inverse() == CycNumber(1);
  }
  ok &= expect(axioms, "field axioms on random cyclotomic triples");

  bool products = true;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 24, 30}) {
    std::vector<Int> prod{1};
    for (int d : divisors(n)) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<Int> want(n + 1);
    want[0] = -1;
    want[n] = 1;
    products = products && prod == want;
  }
  ok &= expect(products, "product of cyclotomic polynomials over divisors is x^n - 1");
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool (*run)();
  };
  const Criterion criteria[] = {
      {"group orders and rotation-subgroup orders", orders_criterion},
      {"conjugacy class counts by fixed dimension", profiles_criterion},
      {"decomposition pipeline matches class-count prediction", pipeline_criterion},
      {"reflection counts, classes, discriminant components", reflection_criterion},
      {"invariant degree identities", degrees_criterion},
      {"toric smoothness, indices, crepancy", toric_criterion},
      {"cross-method, age, junior, and field-axiom properties", property_criterion},
  };

  int failures = 0;
  int k = 0;
  for (const Criterion& c : criteria) {
    bool ok = c.run();
    failures += !ok;
    std::printf("%s  %d. %s\n", ok ? "PASS" : "FAIL", ++k, c.label);
  }
  if (failures) {
    std::printf("%d of 7 acceptance criteria failed\n", failures);
    return 1;
  }
  std::printf("all 7 acceptance criteria passed\n");
  return 0;
}
