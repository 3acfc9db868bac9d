#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "reflgrp/errors.hpp"
#include "reflgrp/rational.hpp"

namespace reflgrp {

using Vec3 = std::array<Rational, 3>;

// A rank-3 lattice N given by a basis written in standard coordinates (one
// basis vector per row).  For the quotient lattices used here N contains Z^3
// and 1/covolume is the index [N : Z^3].
class RefinedLattice {
 public:
  static RefinedLattice from_rows(const std::array<Vec3, 3>& rows);  // BadParameter if singular
  static RefinedLattice standard();       // Z^3
  static RefinedLattice half();           // (Z/2)^3
  static RefinedLattice half_sum_even();  // {(a,b,c) in (Z/2)^3 : a+b+c in Z}

  const std::array<Vec3, 3>& rows() const { return rows_; }
  const Rational& covolume() const { return covolume_; }

  // Coordinates of v in this basis, exact.
  Vec3 coords_of(const Vec3& v) const;
  bool contains(const Vec3& v) const;
  bool contains_standard() const;  // Z^3 subset of N

  // All basis vectors have integer coordinate sum; the sum-of-coordinates
  // function is then integral on N and the junior plane a+b+c = 1 is defined.
  bool sum_is_integral() const;

 private:
  std::array<Vec3, 3> rows_;
  Rational covolume_;
};

struct Fan {
  std::vector<Vec3> rays;
  std::vector<std::array<int, 3>> max_cones;  // ray-index triples
};

// Shortest nonzero point of N on the ray R+ * v.  BadParameter if v = 0.
Vec3 primitive_on_ray(const Vec3& v, const RefinedLattice& N);

// |det(primitive generators)| / covolume(N); 1 iff the chart is smooth.
// Degenerate if the rays are linearly dependent.
int cone_index(const std::array<Vec3, 3>& cone, const RefinedLattice& N);

// Every listed cone simplicial and every pair meeting in a common face.
bool fan_is_valid(const Fan& fan);

struct FanReport {
  bool smooth = false;
  std::optional<bool> crepant;  // evaluated only when N.sum_is_integral()
  std::vector<int> per_cone_indices;
  std::vector<int> singular_cones;  // indices into max_cones with index > 1
};
FanReport check_fan(const Fan& fan, const RefinedLattice& N);

// Sum over max cones of |det(rays as listed)| / covolume.  With all rays on a
// common affine plane this is additive, hence invariant under re-triangulating
// the same support.
Rational normalized_support_volume(const Fan& fan, const RefinedLattice& N);

// The two triangulations of the simplex conv(e1, e2, e3) used throughout:
// rays e1, e2, e3 and the edge midpoints m12, m23, m13 in that order.
Fan figure_fan();  // corner cones cut by the drawn segments m12-m23, m23-m13, e1-m23
Fan medial_fan();  // three corner cones plus the central cone (m12, m23, m13)

enum class ToricCase {
  YK_tetra,           // medial fan in Z^3 + Z*(1/2)(1,1,0) + Z*(1/2)(0,1,1)
  YH_z2cubed,         // figure fan in the sum-even half lattice
  Y_z2cubed,          // figure fan in the full half lattice
  HHilb_z2cubed,      // medial fan in the sum-even half lattice
  HHilbQuot_z2cubed,  // medial fan in the full half lattice
};
const std::vector<ToricCase>& all_toric_cases();
std::string toric_case_name(ToricCase c);
ToricCase toric_case_from_name(const std::string& name);  // throws UnknownCase
std::pair<Fan, RefinedLattice> builtin_toric_case(ToricCase c);

}  // namespace reflgrp
