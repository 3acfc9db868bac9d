#include "reflgrp/toric.hpp"

#include <algorithm>

namespace reflgrp {

namespace {

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 negate(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

// Solve [c0 c1 c2] x = v by Cramer, columns given.
Vec3 solve_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2, const Vec3& v) {
  const Rational d = det3(c0, c1, c2);
  if (d == 0) throw Degenerate();
  return {det3(v, c1, c2) / d, det3(c0, v, c2) / d, det3(c0, c1, v) / d};
}

// Primitive integer vector on the line of v, first nonzero coordinate positive;
// canonical representative of a rational ray direction.
Vec3 canonical_direction(const Vec3& v) {
  Int l = 1;
  for (const Rational& x : v) l = lcm(l, denominator(x));
  std::array<Int, 3> w;
  Int g = 0;
  for (int i = 0; i < 3; ++i) {
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, boost::multiprecision::abs(w[i]));
  }
  if (g == 0) throw BadParameter("zero vector has no direction");
  int lead = 0;
  while (w[lead] == 0) ++lead;
  if (w[lead] < 0) g = -g;
  return {Rational(w[0] / g), Rational(w[1] / g), Rational(w[2] / g)};
}

}  // namespace

RefinedLattice RefinedLattice::from_rows(const std::array<Vec3, 3>& rows) {
  const Rational d = det3(rows[0], rows[1], rows[2]);
  if (d == 0) throw BadParameter("lattice basis is singular");
  RefinedLattice N;
  N.rows_ = rows;
  N.covolume_ = d < 0 ? -d : d;
  return N;
}

RefinedLattice RefinedLattice::standard() {
  return from_rows({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
}

RefinedLattice RefinedLattice::half() {
  const Rational h(1, 2);
  return from_rows({Vec3{h, 0, 0}, Vec3{0, h, 0}, Vec3{0, 0, h}});
}

RefinedLattice RefinedLattice::half_sum_even() {
  const Rational h(1, 2);
  return from_rows({Vec3{h, h, 0}, Vec3{0, h, h}, Vec3{0, 0, 1}});
}

Vec3 RefinedLattice::coords_of(const Vec3& v) const {
  // v = c0*rows[0] + c1*rows[1] + c2*rows[2]: the basis vectors are the
  // columns of the system.
  return solve_columns(rows_[0], rows_[1], rows_[2], v);
}

bool RefinedLattice::contains(const Vec3& v) const {
  for (const Rational& c : coords_of(v))
    if (!is_integer(c)) return false;
  return true;
}

bool RefinedLattice::contains_standard() const {
  return contains({1, 0, 0}) && contains({0, 1, 0}) && contains({0, 0, 1});
}

bool RefinedLattice::sum_is_integral() const {
  for (const Vec3& r : rows_)
    if (!is_integer(r[0] + r[1] + r[2])) return false;
  return true;
}

Vec3 primitive_on_ray(const Vec3& v, const RefinedLattice& N) {
  if (is_zero(v)) throw BadParameter("zero vector spans no ray");
  const Vec3 c = N.coords_of(v);
  Int l = 1;
  for (const Rational& x : c) l = lcm(l, denominator(x));
  std::array<Int, 3> w;
  Int g = 0;
  for (int i = 0; i < 3; ++i) {
    w[i] = numerator(c[i]) * (l / denominator(c[i]));
    g = gcd(g, boost::multiprecision::abs(w[i]));
  }
  Vec3 out{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const Rational coeff(w[i] / g);
    for (int j = 0; j < 3; ++j) out[j] += coeff * N.rows()[i][j];
  }
  return out;
}

int cone_index(const std::array<Vec3, 3>& cone, const RefinedLattice& N) {
  std::array<Vec3, 3> p;
  for (int i = 0; i < 3; ++i) p[i] = primitive_on_ray(cone[i], N);
  Rational d = det3(p[0], p[1], p[2]);
  if (d == 0) throw Degenerate();
  if (d < 0) d = -d;
  const Rational idx = d / N.covolume();
  if (!is_integer(idx) || idx < 1)
    throw InternalMismatch("cone index is not a positive integer");
  return static_cast<int>(numerator(idx));
}

namespace {

struct ConeGeom {
  std::array<Vec3, 3> rays;
  std::array<Vec3, 3> normals;  // inward facet normals, normal i opposite ray i
};

ConeGeom cone_geometry(const Fan& fan, const std::array<int, 3>& cone) {
  ConeGeom g;
  for (int i = 0; i < 3; ++i) g.rays[i] = fan.rays[cone[i]];
  if (det3(g.rays[0], g.rays[1], g.rays[2]) == 0) throw Degenerate();
  for (int i = 0; i < 3; ++i) {
    Vec3 n = cross(g.rays[(i + 1) % 3], g.rays[(i + 2) % 3]);
    if (dot(n, g.rays[i]) < 0) n = negate(n);
    g.normals[i] = n;
  }
  return g;
}

bool cone_contains(const ConeGeom& g, const Vec3& v) {
  for (const Vec3& n : g.normals)
    if (dot(n, v) < 0) return false;
  return true;
}

// Extreme-ray candidates of the intersection of two simplicial cones: rays of
// either cone lying in the other, plus facet-pair intersection lines.
std::vector<Vec3> intersection_generators(const ConeGeom& a, const ConeGeom& b) {
  std::vector<Vec3> out;
  for (const Vec3& r : a.rays)
    if (cone_contains(b, r)) out.push_back(r);
  for (const Vec3& r : b.rays)
    if (cone_contains(a, r)) out.push_back(r);
  for (const Vec3& na : a.normals)
    for (const Vec3& nb : b.normals) {
      const Vec3 d = cross(na, nb);
      if (is_zero(d)) continue;
      if (cone_contains(a, d) && cone_contains(b, d)) out.push_back(d);
      const Vec3 nd = negate(d);
      if (cone_contains(a, nd) && cone_contains(b, nd)) out.push_back(nd);
    }
  return out;
}

// True iff cone(a) meets cone(b) exactly in the face of each spanned by their
// shared rays: every generator of the intersection must have zero coordinate
// on each non-shared ray.
bool pair_meets_in_face(const Fan& fan, const std::array<int, 3>& ca,
                        const std::array<int, 3>& cb) {
  const ConeGeom a = cone_geometry(fan, ca);
  const ConeGeom b = cone_geometry(fan, cb);

  auto shared_mask = [&](const std::array<int, 3>& self, const std::array<int, 3>& other) {
    std::array<bool, 3> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (canonical_direction(fan.rays[self[i]]) == canonical_direction(fan.rays[other[j]]))
          m[i] = true;
      }
    return m;
  };
  const std::array<bool, 3> sa = shared_mask(ca, cb);
  const std::array<bool, 3> sb = shared_mask(cb, ca);

  auto in_shared_face = [](const ConeGeom& g, const std::array<bool, 3>& shared, const Vec3& v) {
    const Vec3 lambda = solve_columns(g.rays[0], g.rays[1], g.rays[2], v);
    for (int i = 0; i < 3; ++i) {
      if (lambda[i] < 0) return false;
      if (!shared[i] && lambda[i] != 0) return false;
    }
    return true;
  };

  for (const Vec3& v : intersection_generators(a, b))
    if (!in_shared_face(a, sa, v) || !in_shared_face(b, sb, v)) return false;
  return true;
}

}  // namespace

bool fan_is_valid(const Fan& fan) {
  for (const auto& c : fan.max_cones) {
    for (int i : c)
      if (i < 0 || i >= static_cast<int>(fan.rays.size())) return false;
    if (det3(fan.rays[c[0]], fan.rays[c[1]], fan.rays[c[2]]) == 0) return false;
  }
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = i + 1; j < fan.max_cones.size(); ++j)
      if (!pair_meets_in_face(fan, fan.max_cones[i], fan.max_cones[j])) return false;
  return true;
}

FanReport check_fan(const Fan& fan, const RefinedLattice& N) {
  if (!fan_is_valid(fan)) throw BadParameter("cones must be simplicial and intersect in faces");
  FanReport rep;
  rep.smooth = true;
  for (size_t i = 0; i < fan.max_cones.size(); ++i) {
    const auto& c = fan.max_cones[i];
    const int idx = cone_index({fan.rays[c[0]], fan.rays[c[1]], fan.rays[c[2]]}, N);
    rep.per_cone_indices.push_back(idx);
    if (idx != 1) {
      rep.smooth = false;
      rep.singular_cones.push_back(static_cast<int>(i));
    }
  }
  if (N.sum_is_integral()) {
    bool crepant = true;
    for (const Vec3& r : fan.rays) {
      const Vec3 p = primitive_on_ray(r, N);
      if (p[0] + p[1] + p[2] != 1) crepant = false;
    }
    rep.crepant = crepant;
  }
  return rep;
}

Rational normalized_support_volume(const Fan& fan, const RefinedLattice& N) {
  Rational total = 0;
  for (const auto& c : fan.max_cones) {
    Rational d = det3(fan.rays[c[0]], fan.rays[c[1]], fan.rays[c[2]]);
    if (d == 0) throw Degenerate();
    total += (d < 0 ? -d : d) / N.covolume();
  }
  return total;
}

namespace {

std::vector<Vec3> simplex_rays() {
  const Rational h(1, 2);
  return {
      Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1},  // e1, e2, e3
      Vec3{h, h, 0}, Vec3{0, h, h}, Vec3{h, 0, h},  // m12, m23, m13
  };
}

}  // namespace

Fan figure_fan() {
  Fan f;
  f.rays = simplex_rays();
  f.max_cones = {{0, 3, 4}, {3, 1, 4}, {0, 4, 5}, {5, 4, 2}};
  return f;
}

Fan medial_fan() {
  Fan f;
  f.rays = simplex_rays();
  f.max_cones = {{0, 3, 5}, {1, 3, 4}, {2, 4, 5}, {3, 4, 5}};
  return f;
}

const std::vector<ToricCase>& all_toric_cases() {
  static const std::vector<ToricCase> cases{
      ToricCase::YK_tetra,      ToricCase::YH_z2cubed,       ToricCase::Y_z2cubed,
      ToricCase::HHilb_z2cubed, ToricCase::HHilbQuot_z2cubed,
  };
  return cases;
}

std::string toric_case_name(ToricCase c) {
  switch (c) {
    case ToricCase::YK_tetra:
      return "YK_tetra";
    case ToricCase::YH_z2cubed:
      return "YH_z2cubed";
    case ToricCase::Y_z2cubed:
      return "Y_z2cubed";
    case ToricCase::HHilb_z2cubed:
      return "HHilb_z2cubed";
    case ToricCase::HHilbQuot_z2cubed:
      return "HHilbQuot_z2cubed";
  }
  throw BadParameter("unhandled toric case enumerator");
}

ToricCase toric_case_from_name(const std::string& name) {
  for (ToricCase c : all_toric_cases())
    if (toric_case_name(c) == name) return c;
  throw UnknownCase(name);
}

std::pair<Fan, RefinedLattice> builtin_toric_case(ToricCase c) {
  const Rational h(1, 2);
  switch (c) {
    case ToricCase::YK_tetra:
      return {medial_fan(),
              RefinedLattice::from_rows({Vec3{h, h, 0}, Vec3{0, h, h}, Vec3{0, 0, 1}})};
    case ToricCase::YH_z2cubed:
      return {figure_fan(), RefinedLattice::half_sum_even()};
    case ToricCase::Y_z2cubed:
      return {figure_fan(), RefinedLattice::half()};
    case ToricCase::HHilb_z2cubed:
      return {medial_fan(), RefinedLattice::half_sum_even()};
    case ToricCase::HHilbQuot_z2cubed:
      return {medial_fan(), RefinedLattice::half()};
  }
  throw BadParameter("unhandled toric case enumerator");
}

}  // namespace reflgrp
