#include "reflgrp/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "reflgrp/kernels.hpp"

namespace reflgrp {

struct FiniteMatrixGroup::Caches {
  std::once_flag survey_flag;
  std::once_flag classes_flag;
  ElementSurvey survey;
  std::vector<ConjClass> classes;
};

FiniteMatrixGroup FiniteMatrixGroup::close(std::vector<SquareMatrix> generators, int rank,
                                           int max_order) {
  if (rank < 1 || rank > 3) throw BadParameter("rank must be 1, 2 or 3");
  if (max_order < 1) throw BadParameter("max_order must be >= 1");

  FiniteMatrixGroup G;
  G.rank_ = rank;
  G.caches_ = std::make_shared<Caches>();

  int L = 1;
  for (const SquareMatrix& g : generators) {
    if (g.rank() != rank) throw BadParameter("generator rank differs from the declared rank");
    L = std::lcm(L, g.conductor_lcm());
  }
  G.conductor_ = L;

  std::vector<SquareMatrix> gens;
  gens.reserve(generators.size());
  for (const SquareMatrix& g : generators) {
    SquareMatrix pg = g.promoted(L);
    if (pg.det().is_zero()) throw Singular();
    gens.push_back(std::move(pg));
  }

  // Every stored element lives at the shared conductor L, so the normalized
  // key is canonical: products must be re-promoted (zero entries of a product
  // fall back to conductor 1) before the lookup.
  auto add = [&G, max_order, L](SquareMatrix m) -> int {
    std::string k = m.key();
    auto it = G.index_.find(k);
    if (it != G.index_.end()) return it->second;
    if (static_cast<int>(G.elems_.size()) >= max_order) throw OrderExceeded(max_order);
    const int idx = static_cast<int>(G.elems_.size());
    G.index_.emplace(std::move(k), idx);
    G.elems_.push_back(std::move(m));
    return idx;
  };

  add(SquareMatrix::identity(rank).promoted(L));
  for (size_t head = 0; head < G.elems_.size(); ++head) {
    const SquareMatrix cur = G.elems_[head];  // copy: elems_ grows while iterating
    for (const SquareMatrix& g : gens) add((cur * g).promoted(L));
  }
  for (const SquareMatrix& g : gens) G.gen_idx_.push_back(G.index_.at(g.key()));
  return G;
}

std::optional<int> FiniteMatrixGroup::index_of(const SquareMatrix& m) const {
  if (m.rank() != rank_) return std::nullopt;
  const int ml = m.conductor_lcm();
  SquareMatrix c(rank_);
  if (conductor_ % ml == 0) {
    c = m.promoted(conductor_);
  } else {
    // Entries stored above the group conductor may still be values of Q(zeta_L).
    const int big = std::lcm(conductor_, ml);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        auto d = m.at(i, j).promoted(big).demoted(conductor_);
        if (!d) return std::nullopt;
        c.at(i, j) = std::move(*d);
      }
  }
  auto it = index_.find(c.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteMatrixGroup::product_index(int i, int j) const {
  auto it = index_.find((elems_[i] * elems_[j]).promoted(conductor_).key());
  if (it == index_.end()) throw InternalMismatch("product of two elements left the closed group");
  return it->second;
}

int FiniteMatrixGroup::inverse_index(int i) const {
  auto it = index_.find(elems_[i].inverse().promoted(conductor_).key());
  if (it == index_.end()) throw InternalMismatch("inverse of an element left the closed group");
  return it->second;
}

const ElementSurvey& FiniteMatrixGroup::survey() const {
  std::call_once(caches_->survey_flag,
                 [this] { caches_->survey = survey_elements(*this, Exec::par); });
  return caches_->survey;
}

const std::vector<ConjClass>& FiniteMatrixGroup::classes() const {
  std::call_once(caches_->classes_flag, [this] {
    const ElementSurvey& sv = survey();
    std::vector<int> gen_inv;
    gen_inv.reserve(gen_idx_.size());
    for (int gi : gen_idx_) gen_inv.push_back(inverse_index(gi));

    std::vector<char> seen(elems_.size(), 0);
    std::vector<ConjClass> out;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit{i};
      seen[i] = 1;
      for (size_t h = 0; h < orbit.size(); ++h) {
        for (size_t k = 0; k < gen_idx_.size(); ++k) {
          const int y = product_index(product_index(gen_idx_[k], orbit[h]), gen_inv[k]);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      ConjClass c;
      c.representative_index = i;
      c.element_order = sv.order[i];
      c.fixed_dim = sv.fixed_dim[i];
      c.determinant = sv.det[i];
      if (sv.det_is_one[i]) c.age = sv.age[i];
      for (int m : orbit)
        if (sv.fixed_dim[m] != c.fixed_dim || sv.order[m] != c.element_order)
          throw InternalMismatch("order or fixed_dim varies inside a conjugacy class");
      c.member_indices = std::move(orbit);
      out.push_back(std::move(c));
    }
    caches_->classes = std::move(out);
  });
  return caches_->classes;
}

FiniteMatrixGroup close_group(std::vector<SquareMatrix> generators, int max_order) {
  if (generators.empty()) throw BadParameter("close_group needs at least one generator");
  const int rank = generators.front().rank();
  return FiniteMatrixGroup::close(std::move(generators), rank, max_order);
}

FiniteMatrixGroup trivial_group(int rank) { return FiniteMatrixGroup::close({}, rank, 1); }

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& G) { return G.classes(); }

std::pair<int, std::vector<CycNumber>> order_and_traces(const SquareMatrix& g, int order_cap) {
  std::vector<CycNumber> t;
  t.push_back(CycNumber(g.rank()));
  SquareMatrix cur = g;
  int r = 1;
  while (!cur.is_identity()) {
    t.push_back(cur.trace());
    cur = cur * g;
    ++r;
    if (r > order_cap) throw OrderExceeded(order_cap);
  }
  return {r, std::move(t)};
}

namespace detail {

int kernel_rank_dim(const SquareMatrix& g) {
  const int n = g.rank();
  std::vector<std::vector<CycNumber>> A(n, std::vector<CycNumber>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = i == j ? g.at(i, j) - CycNumber(1) : g.at(i, j);

  // Fraction-free elimination; only zero tests matter, so no pivot division.
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int p = -1;
    for (int q = rank; q < n; ++q)
      if (!A[q][col].is_zero()) {
        p = q;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[rank]);
    for (int q = rank + 1; q < n; ++q) {
      if (A[q][col].is_zero()) continue;
      const CycNumber f = A[q][col];
      for (int j = col; j < n; ++j) A[q][j] = A[q][j] * A[rank][col] - A[rank][j] * f;
    }
    ++rank;
  }
  return n - rank;
}

int fixed_dim_from_traces(int rank, int order, const std::vector<CycNumber>& traces) {
  CycNumber s;
  for (int k = 0; k < order; ++k) s += traces[k];
  Rational v;
  try {
    v = s.to_rational();
  } catch (const NotRational&) {
    throw InternalMismatch("trace average of a finite-order element is not rational");
  }
  v /= order;
  if (!is_integer(v) || v < 0 || v > rank)
    throw InternalMismatch("trace average is not a fixed-space dimension");
  return numerator(v).convert_to<int>();
}

Rational age_from_traces(int rank, int order, const std::vector<CycNumber>& traces,
                         const std::vector<CycNumber>* zeta_powers, int expected_fixed_dim) {
  std::vector<CycNumber> local;
  if (!zeta_powers) {
    local.reserve(order);
    for (int j = 0; j < order; ++j) local.push_back(CycNumber::zeta(order, j));
    zeta_powers = &local;
  }
  Rational result(0);
  Rational multiplicity_sum(0);
  for (int a = 0; a < order; ++a) {
    CycNumber s;
    for (int k = 0; k < order; ++k) {
      const int idx = static_cast<int>((order - static_cast<long long>(a) * k % order) % order);
      s += (*zeta_powers)[idx] * traces[k];
    }
    Rational m;
    try {
      m = s.to_rational();
    } catch (const NotRational&) {
      throw InternalMismatch("eigenvalue multiplicity is not rational");
    }
    m /= order;
    if (!is_integer(m) || m < 0)
      throw InternalMismatch("eigenvalue multiplicity is not a non-negative integer");
    if (a == 0 && expected_fixed_dim >= 0 && m != expected_fixed_dim)
      throw InternalMismatch("multiplicity of eigenvalue 1 disagrees with fixed_dim");
    multiplicity_sum += m;
    result += m * Rational(a, order);
  }
  if (multiplicity_sum != rank)
    throw InternalMismatch("eigenvalue multiplicities do not sum to the rank");
  return result;
}

}  // namespace detail

int fixed_dim(const SquareMatrix& g, int order_cap) {
  auto [r, t] = order_and_traces(g, order_cap);
  const int via_kernel = detail::kernel_rank_dim(g);
  const int via_traces = detail::fixed_dim_from_traces(g.rank(), r, t);
  if (via_kernel != via_traces)
    throw InternalMismatch("kernel-rank and trace-average fixed dimensions disagree");
  return via_kernel;
}

Rational age(const SquareMatrix& g, int order_cap) {
  if (g.det() != CycNumber(1)) throw NotSL();
  auto [r, t] = order_and_traces(g, order_cap);
  return detail::age_from_traces(g.rank(), r, t, nullptr, detail::kernel_rank_dim(g));
}

std::vector<int> fixed_dim_profile(const FiniteMatrixGroup& G) {
  std::vector<int> profile(G.rank() + 1, 0);
  for (const ConjClass& c : G.classes()) ++profile[c.fixed_dim];
  return profile;
}

FiniteMatrixGroup sl_part(const FiniteMatrixGroup& G) {
  const ElementSurvey& sv = G.survey();
  std::vector<int> sl;
  for (int i = 0; i < G.size(); ++i)
    if (sv.det_is_one[i]) sl.push_back(i);
  if (static_cast<int>(sl.size()) == G.size()) return G;

  // Greedy generating set: adjoin the first det-1 element outside the closure so far.
  std::vector<int> gens;
  std::vector<char> in_closure(G.size(), 0);
  in_closure[0] = 1;
  auto reclose = [&] {
    std::fill(in_closure.begin(), in_closure.end(), 0);
    std::vector<int> q{0};
    in_closure[0] = 1;
    for (size_t h = 0; h < q.size(); ++h)
      for (int g : gens) {
        const int y = G.product_index(q[h], g);
        if (!in_closure[y]) {
          in_closure[y] = 1;
          q.push_back(y);
        }
      }
  };
  for (int i : sl)
    if (!in_closure[i]) {
      gens.push_back(i);
      reclose();
    }
  std::vector<SquareMatrix> mats;
  mats.reserve(gens.size());
  for (int g : gens) mats.push_back(G.element(g));
  return FiniteMatrixGroup::close(std::move(mats), G.rank(), G.size());
}

int junior_class_count(const FiniteMatrixGroup& H) {
  const ElementSurvey& sv = H.survey();
  for (int i = 0; i < H.size(); ++i)
    if (!sv.det_is_one[i]) throw NotSL();
  int count = 0;
  for (const ConjClass& c : H.classes())
    if (c.age && *c.age == 1) ++count;
  return count;
}

}  // namespace reflgrp
