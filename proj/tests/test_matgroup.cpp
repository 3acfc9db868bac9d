#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "reflgrp/group.hpp"
#include "reflgrp/kernels.hpp"

using namespace reflgrp;

namespace {

SquareMatrix sdiag(std::vector<int> d) {
  std::vector<CycNumber> c;
  for (int v : d) c.push_back(CycNumber(v));
  return SquareMatrix::diagonal(std::move(c));
}

SquareMatrix swap12_3() {
  auto m = SquareMatrix(3);
  m.at(0, 1) = CycNumber(1);
  m.at(1, 0) = CycNumber(1);
  m.at(2, 2) = CycNumber(1);
  return m;
}

SquareMatrix cycle3() {
  auto m = SquareMatrix(3);
  m.at(0, 2) = CycNumber(1);
  m.at(1, 0) = CycNumber(1);
  m.at(2, 1) = CycNumber(1);
  return m;
}

std::vector<SquareMatrix> z2cubed_gens() {
  return {sdiag({-1, 1, 1}), sdiag({1, -1, 1}), sdiag({1, 1, -1})};
}

std::vector<SquareMatrix> tetra_gens() {
  return {sdiag({1, -1, -1}), sdiag({-1, 1, -1}), cycle3(), swap12_3()};
}

std::vector<SquareMatrix> octa_gens() {
  return {sdiag({-1, 1, 1}), swap12_3(), cycle3()};
}

// Order-5 rotation about the icosahedron vertex (0, 1, phi), entries in
// (1/2)Z[phi] with phi = -(zeta_5^2 + zeta_5^3).
std::vector<SquareMatrix> icosa_gens() {
  CycNumber phi = -(CycNumber::zeta(5, 2) + CycNumber::zeta(5, 3));
  CycNumber half(Rational(1, 2));
  CycNumber one(1);
  SquareMatrix r5 = SquareMatrix::from_rows({
      {(phi - one) * half, -phi * half, half},
      {phi * half, half, (phi - one) * half},
      {-half, (phi - one) * half, phi * half},
  });
  return {r5, cycle3(), sdiag({-1, -1, -1})};
}

std::vector<SquareMatrix> dihedral_x_z2_gens(int n) {
  SquareMatrix rot = SquareMatrix::diagonal(
      {CycNumber::zeta(n), CycNumber::zeta(n, n - 1), CycNumber(1)});
  return {rot, swap12_3(), sdiag({1, 1, -1})};
}

// Full-conjugation partition, conjugating by every element; oracle for the
// orbit-by-generators production path.
std::vector<std::set<int>> brute_classes(const FiniteMatrixGroup& G) {
  std::vector<int> inv(G.size());
  for (int g = 0; g < G.size(); ++g) inv[g] = G.inverse_index(g);
  std::vector<std::set<int>> out;
  std::vector<char> seen(G.size(), 0);
  for (int x = 0; x < G.size(); ++x) {
    if (seen[x]) continue;
    std::set<int> orb;
    for (int g = 0; g < G.size(); ++g) orb.insert(G.product_index(G.product_index(g, x), inv[g]));
    for (int y : orb) seen[y] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

std::set<std::set<std::string>> partition_keys(const FiniteMatrixGroup& G) {
  std::set<std::set<std::string>> out;
  for (const ConjClass& c : G.classes()) {
    std::set<std::string> members;
    for (int m : c.member_indices) members.insert(G.element(m).key());
    out.insert(std::move(members));
  }
  return out;
}

}  // namespace

TEST_CASE("closure orders") {
  CHECK(close_group(z2cubed_gens()).size() == 8);
  CHECK(close_group(tetra_gens()).size() == 24);
  CHECK(close_group(octa_gens()).size() == 48);
  CHECK(trivial_group(3).size() == 1);
  CHECK(close_group({SquareMatrix::identity(2)}).size() == 1);
  CHECK(close_group(dihedral_x_z2_gens(5)).size() == 20);
}

TEST_CASE("icosahedral closure has order 120") {
  FiniteMatrixGroup G = close_group(icosa_gens(), 200);
  CHECK(G.size() == 120);
  CHECK(G.conductor() == 5);
}

TEST_CASE("closure error paths") {
  SquareMatrix two(1);
  two.at(0, 0) = CycNumber(2);
  CHECK_THROWS_AS(close_group({two}, 50), OrderExceeded);

  SquareMatrix shear = SquareMatrix::identity(2);
  shear.at(0, 1) = CycNumber(1);
  CHECK_THROWS_AS(close_group({shear}, 100), OrderExceeded);

  SquareMatrix zero(1);
  CHECK_THROWS_AS(close_group({zero}), Singular);
}

TEST_CASE("conjugacy classes against the brute-force oracle") {
  struct Case {
    std::vector<SquareMatrix> gens;
    int expect_classes;
  };
  for (auto& [gens, expect] : std::vector<Case>{{z2cubed_gens(), 8},
                                                {tetra_gens(), 5},
                                                {octa_gens(), 10},
                                                {icosa_gens(), 10}}) {
    FiniteMatrixGroup G = close_group(gens, 200);
    const auto& cls = G.classes();
    CHECK(static_cast<int>(cls.size()) == expect);

    auto oracle = brute_classes(G);
    REQUIRE(oracle.size() == cls.size());
    std::set<std::set<int>> got;
    for (const auto& c : cls) got.insert(std::set<int>(c.member_indices.begin(), c.member_indices.end()));
    CHECK(got == std::set<std::set<int>>(oracle.begin(), oracle.end()));

    // class equation
    size_t total = 0;
    for (const auto& c : cls) {
      total += c.member_indices.size();
      CHECK(G.size() % c.member_indices.size() == 0);
    }
    CHECK(total == static_cast<size_t>(G.size()));
  }
}

TEST_CASE("conjugacy partition independent of generator order") {
  auto a = close_group(octa_gens());
  auto gens = octa_gens();
  std::reverse(gens.begin(), gens.end());
  gens.push_back(sdiag({1, -1, 1}));  // redundant generator
  auto b = close_group(gens);
  REQUIRE(a.size() == b.size());
  CHECK(partition_keys(a) == partition_keys(b));
}

TEST_CASE("fixed_dim basics") {
  CHECK(fixed_dim(SquareMatrix::identity(3)) == 3);
  CHECK(fixed_dim(sdiag({-1, -1, -1})) == 0);
  CHECK(fixed_dim(sdiag({-1, -1, 1})) == 1);
  CHECK(fixed_dim(swap12_3()) == 2);
  CHECK(fixed_dim(cycle3()) == 1);
}

TEST_CASE("fixed_dim profiles of the rank-3 groups") {
  auto profile = [](const std::vector<SquareMatrix>& gens) {
    return fixed_dim_profile(close_group(gens, 200));
  };
  CHECK(profile(tetra_gens()) == std::vector<int>{1, 2, 1, 1});
  CHECK(profile(octa_gens()) == std::vector<int>{3, 4, 2, 1});
  CHECK(profile(icosa_gens()) == std::vector<int>{4, 4, 1, 1});
  CHECK(profile(z2cubed_gens()) == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("sl_part orders and identity on SL subgroups") {
  CHECK(sl_part(close_group(tetra_gens())).size() == 12);
  CHECK(sl_part(close_group(octa_gens())).size() == 24);
  CHECK(sl_part(close_group(icosa_gens(), 200)).size() == 60);
  CHECK(sl_part(close_group(z2cubed_gens())).size() == 4);

  FiniteMatrixGroup a4 = sl_part(close_group(tetra_gens()));
  CHECK(sl_part(a4).size() == a4.size());
}

TEST_CASE("age basics") {
  CHECK(age(SquareMatrix::identity(3)) == Rational(0));
  CHECK(age(sdiag({-1, -1, 1})) == Rational(1));
  CHECK(age(cycle3()) == Rational(1));
  CHECK_THROWS_AS(age(sdiag({-1, 1, 1})), NotSL);
}

TEST_CASE("every nontrivial rotation has age 1; exponent pairing") {
  for (auto& gens : {tetra_gens(), octa_gens(), icosa_gens(), z2cubed_gens(),
                     dihedral_x_z2_gens(7), dihedral_x_z2_gens(8)}) {
    FiniteMatrixGroup H = sl_part(close_group(gens, 200));
    const ElementSurvey& sv = H.survey();
    for (int i = 0; i < H.size(); ++i) {
      if (i == 0) {
        CHECK(sv.age[i] == Rational(0));
        continue;
      }
      CHECK(sv.age[i] == Rational(1));
      const int j = H.inverse_index(i);
      CHECK(sv.age[i] + sv.age[j] == Rational(H.rank() - sv.fixed_dim[i]));
    }
  }
}

TEST_CASE("junior class counts of the SL-parts") {
  CHECK(junior_class_count(sl_part(close_group(tetra_gens()))) == 3);
  CHECK(junior_class_count(sl_part(close_group(octa_gens()))) == 4);
  CHECK(junior_class_count(sl_part(close_group(icosa_gens(), 200))) == 4);
  CHECK_THROWS_AS(junior_class_count(close_group(octa_gens())), NotSL);
}

TEST_CASE("parallel survey kernel agrees exactly with the serial reference") {
  for (auto& gens : {tetra_gens(), octa_gens(), dihedral_x_z2_gens(6), z2cubed_gens()}) {
    FiniteMatrixGroup G = close_group(gens);
    ElementSurvey a = survey_elements(G, Exec::par);
    ElementSurvey b = survey_elements_serial(G);
    CHECK(a.order == b.order);
    CHECK(a.fixed_dim == b.fixed_dim);
    CHECK(a.det_is_one == b.det_is_one);
    CHECK(a.age == b.age);
    for (int i = 0; i < G.size(); ++i) CHECK(a.det[i] == b.det[i]);
  }
}

TEST_CASE("matrix inverse and lookups") {
  FiniteMatrixGroup G = close_group(dihedral_x_z2_gens(5));
  for (int i : {1, 3, 7}) {
    const SquareMatrix& g = G.element(i);
    CHECK((g * g.inverse()).is_identity());
    CHECK(G.product_index(i, G.inverse_index(i)) == 0);
  }

  // index_of must see through conductor differences
  FiniteMatrixGroup z = close_group(z2cubed_gens());
  SquareMatrix id12 = SquareMatrix::identity(3).promoted(12);
  auto idx = z.index_of(id12);
  REQUIRE(idx.has_value());
  CHECK(*idx == 0);
  CHECK_FALSE(z.index_of(cycle3()).has_value());
}

TEST_CASE("conjugacy class data fields") {
  FiniteMatrixGroup G = close_group(octa_gens());
  for (const ConjClass& c : G.classes()) {
    CHECK(c.representative_index == c.member_indices.front());
    CHECK(c.age.has_value() == (c.determinant == CycNumber(1)));
    if (c.representative_index == 0) {
      CHECK(c.element_order == 1);
      CHECK(c.fixed_dim == 3);
      CHECK(c.member_indices.size() == 1);
    }
  }
}
