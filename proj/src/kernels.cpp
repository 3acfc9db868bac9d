#include "reflgrp/kernels.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reflgrp {

ElementSurvey survey_elements(const FiniteMatrixGroup& G, Exec mode) {
  const int n = G.size();
  const int rank = G.rank();
  ElementSurvey sv;
  sv.order.assign(n, 0);
  sv.fixed_dim.assign(n, -1);
  sv.det.assign(n, CycNumber(0));
  sv.det_is_one.assign(n, 0);
  sv.age.assign(n, Rational(0));

  // Power chains, walked once per cyclic subgroup: the traces of g^j are a
  // stride through the traces of g.  Serial; the walk is index-chasing.
  std::vector<int> chain_root(n, -1), chain_pow(n, 0);
  std::vector<std::vector<CycNumber>> chain_tr(n);
  for (int i = 0; i < n; ++i) {
    if (chain_root[i] >= 0) continue;
    std::vector<int> idxs;
    int cur = i;
    while (true) {
      idxs.push_back(cur);
      if (cur == 0) break;
      cur = G.product_index(cur, i);
    }
    const int r = static_cast<int>(idxs.size());
    std::vector<CycNumber> tr(r);
    tr[0] = CycNumber(rank);
    for (int k = 1; k < r; ++k) tr[k] = G.element(idxs[k - 1]).trace();
    for (int j = 1; j <= r; ++j) {
      const int e = idxs[j - 1];
      if (chain_root[e] < 0) {
        chain_root[e] = i;
        chain_pow[e] = j % r;  // identity sits at power r = 0 mod r
      }
    }
    chain_tr[i] = std::move(tr);
  }

  auto traces_of = [&](int e) {
    const int root = chain_root[e];
    const int j = chain_pow[e];
    const std::vector<CycNumber>& rt = chain_tr[root];
    const int r_root = static_cast<int>(rt.size());
    const int r = j == 0 ? 1 : r_root / std::gcd(r_root, j);
    std::vector<CycNumber> t(r);
    for (int k = 0; k < r; ++k) t[k] = rt[static_cast<size_t>(static_cast<long long>(j) * k % r_root)];
    return std::pair<int, std::vector<CycNumber>>(r, std::move(t));
  };

  for_each_index(n, mode, [&](int e) {
    auto [r, t] = traces_of(e);
    sv.order[e] = r;
    const int via_kernel = detail::kernel_rank_dim(G.element(e));
    const int via_traces = detail::fixed_dim_from_traces(rank, r, t);
    if (via_kernel != via_traces)
      throw InternalMismatch("kernel-rank and trace-average fixed dimensions disagree");
    sv.fixed_dim[e] = via_kernel;
    CycNumber d = G.element(e).det();
    sv.det_is_one[e] = d == CycNumber(1) ? 1 : 0;
    sv.det[e] = std::move(d);
  });

  // Zeta-power tables per occurring order of a det-1 element, promoted to the
  // conductor the age sums will live at.
  std::map<int, std::vector<CycNumber>> zeta_tables;
  for (int e = 0; e < n; ++e) {
    if (!sv.det_is_one[e]) continue;
    const int r = sv.order[e];
    if (zeta_tables.count(r)) continue;
    const int c = std::lcm(G.conductor(), r);
    std::vector<CycNumber> zp(r);
    for (int j = 0; j < r; ++j) zp[j] = CycNumber::zeta(r, j).promoted(c);
    zeta_tables.emplace(r, std::move(zp));
  }

  for_each_index(n, mode, [&](int e) {
    if (!sv.det_is_one[e]) return;
    auto [r, t] = traces_of(e);
    const int c = std::lcm(G.conductor(), r);
    for (CycNumber& x : t) x = x.promoted(c);
    sv.age[e] = detail::age_from_traces(rank, r, t, &zeta_tables.at(r), sv.fixed_dim[e]);
  });

  return sv;
}

ElementSurvey survey_elements_serial(const FiniteMatrixGroup& G) {
  const int n = G.size();
  ElementSurvey sv;
  sv.order.assign(n, 0);
  sv.fixed_dim.assign(n, -1);
  sv.det.assign(n, CycNumber(0));
  sv.det_is_one.assign(n, 0);
  sv.age.assign(n, Rational(0));
  for (int e = 0; e < n; ++e) {
    const SquareMatrix& g = G.element(e);
    auto [r, t] = order_and_traces(g, G.size());
    sv.order[e] = r;
    const int via_kernel = detail::kernel_rank_dim(g);
    const int via_traces = detail::fixed_dim_from_traces(G.rank(), r, t);
    if (via_kernel != via_traces)
      throw InternalMismatch("kernel-rank and trace-average fixed dimensions disagree");
    sv.fixed_dim[e] = via_kernel;
    CycNumber d = g.det();
    sv.det_is_one[e] = d == CycNumber(1) ? 1 : 0;
    sv.det[e] = std::move(d);
    if (sv.det_is_one[e])
      sv.age[e] = detail::age_from_traces(G.rank(), r, t, nullptr, sv.fixed_dim[e]);
  }
  return sv;
}

}  // namespace reflgrp
