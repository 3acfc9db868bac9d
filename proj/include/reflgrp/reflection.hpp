#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflgrp/group.hpp"
#include "reflgrp/kernels.hpp"

namespace reflgrp {

// The finite real reflection groups of rank <= 3, up to conjugacy.
enum class Family {
  Z2,             // rank 1, order 2
  Z2xZ2,          // rank 2, order 4
  Z2cubed,        // rank 3, order 8
  DihedralRank2,  // rank 2, order 2n
  Dihedral,       // rank 3 = rank-2 dihedral plus a fixed line, order 2n
  DihedralxZ2,    // rank 3, order 4n
  Tetrahedral,    // rank 3, order 24
  Octahedral,     // rank 3, order 48
  Icosahedral,    // rank 3, order 120
};

struct FamilySpec {
  Family family = Family::Z2;
  int n = 0;  // dihedral rotation order; meaningful only for the three dihedral families

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

bool family_takes_n(Family f);
int family_rank(Family f);
const std::vector<Family>& all_families();

// Lowercase stable names used by the command-line surface and the JSON files.
std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws UnknownFamily
std::string spec_label(const FamilySpec& s);       // e.g. "dihedral_x_z2(7)"

// Exact generator matrices; entries are cyclotomic numbers. Dihedral families
// require n >= 3 (BadParameter otherwise).
std::vector<SquareMatrix> builtin_generators(const FamilySpec& s);
FiniteMatrixGroup build_family(const FamilySpec& s,
                               int max_order = FiniteMatrixGroup::kDefaultMaxOrder);

// Indices of the elements fixing a hyperplane (fixed_dim == rank - 1), ascending.
std::vector<int> pseudoreflections(const FiniteMatrixGroup& G);

// True iff the reflections generate the whole group (trivially true for order 1).
bool is_reflection_group(const FiniteMatrixGroup& G);

// Orbits of the reflecting hyperplanes under the group action, with the
// multiplicity attached to each orbit: 1 + (number of reflections fixing a
// hyperplane in the orbit).  Throws NotReflectionGroup.
struct DiscriminantInfo {
  int component_count = 0;
  std::vector<int> multiplicities;  // one per component, sorted ascending
};
DiscriminantInfo discriminant_components(const FiniteMatrixGroup& G);

// Coefficients 0..precision of (1/|G|) sum_g 1/det(1 - t g), exact.  The
// default path works class-by-class; molien_series_serial is the plain
// element-by-element reference kept for testing.
std::vector<Rational> molien_series(const FiniteMatrixGroup& G, int precision,
                                    Exec mode = Exec::par);
std::vector<Rational> molien_series_serial(const FiniteMatrixGroup& G, int precision);
int default_molien_precision(const FiniteMatrixGroup& G);

// Degrees d_1 <= ... <= d_rank recovered from the Molien series by repeatedly
// extracting the smallest degree with a positive residual coefficient.  The
// result is validated (residual collapses to 1, product of degrees = |G|,
// sum of (d_i - 1) = number of reflections); DegreeRecoveryFailed otherwise.
std::vector<int> invariant_degrees(const FiniteMatrixGroup& G);

// Match G against the builtin catalog by exact numeric signature
// (rank, order, reflection count, discriminant components, degrees).
std::optional<FamilySpec> classify(const FiniteMatrixGroup& G);

struct ReflectionReport {
  int group_order = 0;
  bool is_reflection_group = false;
  int reflection_count = 0;
  int reflection_class_count = 0;
  int discriminant_component_count = 0;
  std::vector<int> hyperplane_multiplicities;
  std::vector<int> invariant_degrees;
  std::vector<int> fixed_dim_profile;
  std::optional<FamilySpec> family;
};
ReflectionReport analyze(const FiniteMatrixGroup& G);

}  // namespace reflgrp
