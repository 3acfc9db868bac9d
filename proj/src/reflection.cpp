#include "reflgrp/reflection.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "reflgrp/errors.hpp"

namespace reflgrp {

namespace {

SquareMatrix sign_diagonal(std::initializer_list<int> d) {
  std::vector<CycNumber> c;
  for (int v : d) c.push_back(CycNumber(v));
  return SquareMatrix::diagonal(std::move(c));
}

SquareMatrix swap_first_two(int rank) {
  SquareMatrix m(rank);
  m.at(0, 1) = CycNumber(1);
  m.at(1, 0) = CycNumber(1);
  for (int i = 2; i < rank; ++i) m.at(i, i) = CycNumber(1);
  return m;
}

SquareMatrix coordinate_cycle() {
  SquareMatrix m(3);
  m.at(0, 2) = CycNumber(1);
  m.at(1, 0) = CycNumber(1);
  m.at(2, 1) = CycNumber(1);
  return m;
}

SquareMatrix planar_rotation(int n, int rank) {
  std::vector<CycNumber> d{CycNumber::zeta(n), CycNumber::zeta(n, n - 1)};
  if (rank == 3) d.push_back(CycNumber(1));
  return SquareMatrix::diagonal(std::move(d));
}

void require_dihedral_n(int n) {
  if (n < 3) throw BadParameter("dihedral parameter must be >= 3");
}

}  // namespace

bool family_takes_n(Family f) {
  return f == Family::DihedralRank2 || f == Family::Dihedral || f == Family::DihedralxZ2;
}

int family_rank(Family f) {
  switch (f) {
    case Family::Z2:
      return 1;
    case Family::Z2xZ2:
    case Family::DihedralRank2:
      return 2;
    default:
      return 3;
  }
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams{
      Family::Z2,          Family::Z2xZ2,      Family::Z2cubed,
      Family::DihedralRank2, Family::Dihedral, Family::DihedralxZ2,
      Family::Tetrahedral, Family::Octahedral, Family::Icosahedral,
  };
  return fams;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Z2:
      return "z2";
    case Family::Z2xZ2:
      return "z2_x_z2";
    case Family::Z2cubed:
      return "z2cubed";
    case Family::DihedralRank2:
      return "dihedral_rank2";
    case Family::Dihedral:
      return "dihedral";
    case Family::DihedralxZ2:
      return "dihedral_x_z2";
    case Family::Tetrahedral:
      return "tetrahedral";
    case Family::Octahedral:
      return "octahedral";
    case Family::Icosahedral:
      return "icosahedral";
  }
  throw BadParameter("unhandled family enumerator");
}

namespace {

std::string squashed_lower(const std::string& name) {
  std::string out;
  for (char ch : name)
    if (ch != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return out;
}

}  // namespace

Family family_from_name(const std::string& name) {
  std::string low = squashed_lower(name);
  for (Family f : all_families())
    if (low == squashed_lower(family_name(f))) return f;
  throw UnknownFamily(name);
}

std::string spec_label(const FamilySpec& s) {
  std::string out = family_name(s.family);
  if (family_takes_n(s.family)) out += "(" + std::to_string(s.n) + ")";
  return out;
}

std::vector<SquareMatrix> builtin_generators(const FamilySpec& s) {
  switch (s.family) {
    case Family::Z2: {
      SquareMatrix m(1);
      m.at(0, 0) = CycNumber(-1);
      return {m};
    }
    case Family::Z2xZ2:
      return {sign_diagonal({-1, 1}), sign_diagonal({1, -1})};
    case Family::Z2cubed:
      return {sign_diagonal({-1, 1, 1}), sign_diagonal({1, -1, 1}), sign_diagonal({1, 1, -1})};
    case Family::DihedralRank2:
      require_dihedral_n(s.n);
      return {planar_rotation(s.n, 2), swap_first_two(2)};
    case Family::Dihedral:
      require_dihedral_n(s.n);
      return {planar_rotation(s.n, 3), swap_first_two(3)};
    case Family::DihedralxZ2:
      require_dihedral_n(s.n);
      return {planar_rotation(s.n, 3), swap_first_two(3), sign_diagonal({1, 1, -1})};
    case Family::Tetrahedral:
      return {sign_diagonal({1, -1, -1}), sign_diagonal({-1, 1, -1}), coordinate_cycle(),
              swap_first_two(3)};
    case Family::Octahedral:
      return {sign_diagonal({-1, 1, 1}), swap_first_two(3), coordinate_cycle()};
    case Family::Icosahedral: {
      // Rotation of order 5 about the icosahedron vertex (0, 1, phi), together
      // with the coordinate cycle and the central inversion; phi is the golden
      // ratio written as -(zeta_5^2 + zeta_5^3).
      const CycNumber phi = -(CycNumber::zeta(5, 2) + CycNumber::zeta(5, 3));
      const CycNumber half(Rational(1, 2));
      const CycNumber one(1);
      SquareMatrix r5 = SquareMatrix::from_rows({
          {(phi - one) * half, -phi * half, half},
          {phi * half, half, (phi - one) * half},
          {-half, (phi - one) * half, phi * half},
      });
      return {r5, coordinate_cycle(), sign_diagonal({-1, -1, -1})};
    }
  }
  throw BadParameter("unhandled family enumerator");
}

FiniteMatrixGroup build_family(const FamilySpec& s, int max_order) {
  return close_group(builtin_generators(s), max_order);
}

std::vector<int> pseudoreflections(const FiniteMatrixGroup& G) {
  const ElementSurvey& sv = G.survey();
  std::vector<int> out;
  for (int i = 1; i < G.size(); ++i)
    if (sv.fixed_dim[i] == G.rank() - 1) out.push_back(i);
  return out;
}

bool is_reflection_group(const FiniteMatrixGroup& G) {
  if (G.size() == 1) return true;  // vacuously generated
  const std::vector<int> refl = pseudoreflections(G);
  if (refl.empty()) return false;
  std::vector<char> in(G.size(), 0);
  std::vector<int> stack{0};
  in[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int r : refl) {
      const int y = G.product_index(x, r);
      if (!in[y]) {
        in[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == G.size();
}

namespace {

// The reflecting line of a pseudoreflection: any nonzero column of g - I,
// scaled so its first nonzero coordinate is 1.
std::vector<CycNumber> reflection_normal(const SquareMatrix& g) {
  const int r = g.rank();
  for (int j = 0; j < r; ++j) {
    std::vector<CycNumber> col(r);
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      col[i] = g.at(i, j);
      if (i == j) col[i] -= CycNumber(1);
      if (!col[i].is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    int lead = 0;
    while (col[lead].is_zero()) ++lead;
    const CycNumber scale = col[lead].inverse();
    for (auto& v : col) v = v * scale;
    return col;
  }
  throw InternalMismatch("pseudoreflection with no moved column");
}

std::string normal_key(const std::vector<CycNumber>& v, int conductor) {
  std::string k;
  for (const CycNumber& c : v) {
    k += c.promoted(conductor).key();
    k += '|';
  }
  return k;
}

std::vector<CycNumber> matvec(const SquareMatrix& g, const std::vector<CycNumber>& v) {
  const int r = g.rank();
  std::vector<CycNumber> out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!g.at(i, j).is_zero() && !v[j].is_zero()) out[i] += g.at(i, j) * v[j];
  return out;
}

std::vector<CycNumber> canonical_line(std::vector<CycNumber> v) {
  int lead = 0;
  while (lead < static_cast<int>(v.size()) && v[lead].is_zero()) ++lead;
  if (lead == static_cast<int>(v.size())) throw InternalMismatch("zero normal vector");
  const CycNumber scale = v[lead].inverse();
  for (auto& c : v) c = c * scale;
  return v;
}

}  // namespace

DiscriminantInfo discriminant_components(const FiniteMatrixGroup& G) {
  if (!is_reflection_group(G)) throw NotReflectionGroup();
  const std::vector<int> refl = pseudoreflections(G);
  if (refl.empty()) return {};

  const int L = G.conductor();
  std::vector<std::vector<CycNumber>> normals;  // one per hyperplane
  std::vector<int> plane_of_refl(refl.size());
  std::map<std::string, int> plane_index;
  for (size_t i = 0; i < refl.size(); ++i) {
    std::vector<CycNumber> n = reflection_normal(G.element(refl[i]));
    std::string k = normal_key(n, L);
    auto [it, fresh] = plane_index.emplace(std::move(k), static_cast<int>(normals.size()));
    if (fresh) normals.push_back(std::move(n));
    plane_of_refl[i] = it->second;
  }

  // multiplicity = order of the pointwise stabilizer = 1 + reflections in the plane
  std::vector<int> mult(normals.size(), 1);
  for (int p : plane_of_refl) ++mult[p];

  // orbits of hyperplanes under the generator action
  std::vector<int> orbit(normals.size(), -1);
  int orbit_count = 0;
  for (size_t seed = 0; seed < normals.size(); ++seed) {
    if (orbit[seed] >= 0) continue;
    const int label = orbit_count++;
    std::vector<int> stack{static_cast<int>(seed)};
    orbit[seed] = label;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (int gi : G.generator_indices()) {
        auto moved = canonical_line(matvec(G.element(gi), normals[p]));
        auto it = plane_index.find(normal_key(moved, L));
        if (it == plane_index.end())
          throw InternalMismatch("hyperplane orbit left the reflection arrangement");
        if (orbit[it->second] < 0) {
          orbit[it->second] = label;
          stack.push_back(it->second);
        }
      }
    }
  }

  DiscriminantInfo out;
  out.component_count = orbit_count;
  out.multiplicities.assign(orbit_count, 0);
  for (size_t p = 0; p < normals.size(); ++p) {
    int& m = out.multiplicities[orbit[p]];
    if (m == 0)
      m = mult[p];
    else if (m != mult[p])
      throw InternalMismatch("stabilizer order not constant on a hyperplane orbit");
  }
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  return out;
}

namespace {

// Coefficients of det(I - t g): 1 - e1 t + e2 t^2 - e3 t^3.
std::vector<CycNumber> char_coeffs(const SquareMatrix& g) {
  switch (g.rank()) {
    case 1:
      return {CycNumber(1), -g.trace()};
    case 2:
      return {CycNumber(1), -g.trace(), g.det()};
    default:
      return {CycNumber(1), -g.trace(), g.principal_minor_sum(), -g.det()};
  }
}

// Power-series inverse of det(I - t g), truncated at degree p.
std::vector<CycNumber> geometric_expansion(const std::vector<CycNumber>& p, int precision) {
  std::vector<CycNumber> u(precision + 1);
  u[0] = CycNumber(1);
  const int deg = static_cast<int>(p.size()) - 1;
  for (int k = 1; k <= precision; ++k) {
    CycNumber acc;
    for (int j = 1; j <= std::min(k, deg); ++j)
      if (!p[j].is_zero()) acc += p[j] * u[k - j];
    u[k] = -acc;
  }
  return u;
}

std::vector<Rational> rationalize(std::vector<CycNumber> total, int order) {
  const CycNumber inv_order{Rational(1, order)};
  std::vector<Rational> out(total.size());
  for (size_t k = 0; k < total.size(); ++k) {
    const CycNumber c = total[k] * inv_order;
    if (!c.is_rational())
      throw InternalMismatch("series coefficient is not rational");
    out[k] = c.to_rational();
  }
  return out;
}

}  // namespace

std::vector<Rational> molien_series(const FiniteMatrixGroup& G, int precision, Exec mode) {
  if (precision < 1) throw BadParameter("series precision must be >= 1");
  const auto& cls = G.classes();
  std::vector<std::vector<CycNumber>> per_class(cls.size());
  for_each_index(cls.size(), mode, [&](size_t c) {
    const ConjClass& cc = cls[c];
    auto u = geometric_expansion(char_coeffs(G.element(cc.representative_index)), precision);
    const CycNumber size(static_cast<int>(cc.member_indices.size()));
    for (auto& v : u) v = v * size;
    per_class[c] = std::move(u);
  });
  std::vector<CycNumber> total(precision + 1);
  for (const auto& u : per_class)
    for (int k = 0; k <= precision; ++k)
      if (!u[k].is_zero()) total[k] += u[k];
  return rationalize(std::move(total), G.size());
}

std::vector<Rational> molien_series_serial(const FiniteMatrixGroup& G, int precision) {
  if (precision < 1) throw BadParameter("series precision must be >= 1");
  std::vector<CycNumber> total(precision + 1);
  for (int i = 0; i < G.size(); ++i) {
    auto u = geometric_expansion(char_coeffs(G.element(i)), precision);
    for (int k = 0; k <= precision; ++k)
      if (!u[k].is_zero()) total[k] += u[k];
  }
  return rationalize(std::move(total), G.size());
}

int default_molien_precision(const FiniteMatrixGroup& G) { return 2 * G.size(); }

std::vector<int> invariant_degrees(const FiniteMatrixGroup& G) {
  if (!is_reflection_group(G)) throw NotReflectionGroup();
  const int P = default_molien_precision(G);
  std::vector<Rational> res = molien_series(G, P);

  std::vector<int> degrees;
  for (int extracted = 0; extracted < G.rank(); ++extracted) {
    int d = 0;
    for (int k = 1; k <= P; ++k)
      if (res[k] != 0) {
        d = k;
        break;
      }
    if (d == 0) throw DegreeRecoveryFailed("series ran out of positive coefficients");
    if (res[d] < 0) throw DegreeRecoveryFailed("leading residual coefficient is negative");
    degrees.push_back(d);
    for (int k = P; k >= d; --k) res[k] -= res[k - d];  // multiply by (1 - t^d)
  }

  if (res[0] != 1) throw DegreeRecoveryFailed("constant term did not stay 1");
  for (int k = 1; k <= P; ++k)
    if (res[k] != 0) throw DegreeRecoveryFailed("residual series is not 1");

  Int prod = 1;
  int refl_sum = 0;
  for (int d : degrees) {
    prod *= d;
    refl_sum += d - 1;
  }
  if (prod != G.size()) throw DegreeRecoveryFailed("degree product differs from the group order");
  if (refl_sum != static_cast<int>(pseudoreflections(G).size()))
    throw DegreeRecoveryFailed("degree sum differs from the reflection count");

  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

struct Signature {
  int order;
  int reflections;
  int components;
  std::vector<int> degrees;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature expected_signature(const FamilySpec& s) {
  const int n = s.n;
  switch (s.family) {
    case Family::Z2:
      return {2, 1, 1, {2}};
    case Family::Z2xZ2:
      return {4, 2, 2, {2, 2}};
    case Family::Z2cubed:
      return {8, 3, 3, {2, 2, 2}};
    case Family::DihedralRank2:
      return {2 * n, n, n % 2 ? 1 : 2, {2, n}};
    case Family::Dihedral:
      return {2 * n, n, n % 2 ? 1 : 2, {1, 2, n}};
    case Family::DihedralxZ2:
      return {4 * n, n + 1, n % 2 ? 2 : 3, {2, 2, n}};
    case Family::Tetrahedral:
      return {24, 6, 1, {2, 3, 4}};
    case Family::Octahedral:
      return {48, 9, 2, {2, 4, 6}};
    case Family::Icosahedral:
      return {120, 15, 1, {2, 6, 10}};
  }
  throw BadParameter("unhandled family enumerator");
}

}  // namespace

std::optional<FamilySpec> classify(const FiniteMatrixGroup& G) {
  if (!is_reflection_group(G)) return std::nullopt;
  const int order = G.size();
  if (order == 1) return std::nullopt;

  std::vector<FamilySpec> candidates;
  switch (G.rank()) {
    case 1:
      if (order == 2) candidates.push_back({Family::Z2, 0});
      break;
    case 2:
      if (order == 4) candidates.push_back({Family::Z2xZ2, 0});
      if (order % 2 == 0 && order / 2 >= 3) candidates.push_back({Family::DihedralRank2, order / 2});
      break;
    case 3:
      if (order == 8) candidates.push_back({Family::Z2cubed, 0});
      if (order == 24) candidates.push_back({Family::Tetrahedral, 0});
      if (order == 48) candidates.push_back({Family::Octahedral, 0});
      if (order == 120) candidates.push_back({Family::Icosahedral, 0});
      if (order % 2 == 0 && order / 2 >= 3) candidates.push_back({Family::Dihedral, order / 2});
      if (order % 4 == 0 && order / 4 >= 3) candidates.push_back({Family::DihedralxZ2, order / 4});
      break;
  }
  if (candidates.empty()) return std::nullopt;

  const Signature sig{order, static_cast<int>(pseudoreflections(G).size()),
                      discriminant_components(G).component_count, invariant_degrees(G)};
  for (const FamilySpec& c : candidates)
    if (expected_signature(c) == sig) return c;
  return std::nullopt;
}

ReflectionReport analyze(const FiniteMatrixGroup& G) {
  ReflectionReport r;
  r.group_order = G.size();
  r.reflection_count = static_cast<int>(pseudoreflections(G).size());
  for (const ConjClass& c : G.classes())
    if (c.representative_index != 0 && c.fixed_dim == G.rank() - 1) ++r.reflection_class_count;
  r.fixed_dim_profile = fixed_dim_profile(G);
  r.is_reflection_group = is_reflection_group(G);
  if (r.is_reflection_group) {
    DiscriminantInfo d = discriminant_components(G);
    r.discriminant_component_count = d.component_count;
    r.hyperplane_multiplicities = std::move(d.multiplicities);
    r.invariant_degrees = invariant_degrees(G);
  }
  r.family = classify(G);
  return r;
}

}  // namespace reflgrp
