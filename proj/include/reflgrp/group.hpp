#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "reflgrp/matrix.hpp"

namespace reflgrp {

// Per-element data shared by the group queries.  Filled by the survey kernels
// (see kernels.hpp); age is meaningful only where det_is_one holds.
struct ElementSurvey {
  std::vector<int> order;
  std::vector<int> fixed_dim;
  std::vector<CycNumber> det;
  std::vector<char> det_is_one;
  std::vector<Rational> age;
};

struct ConjClass {
  int representative_index = 0;
  std::vector<int> member_indices;
  int element_order = 1;
  int fixed_dim = 0;
  CycNumber determinant;
  std::optional<Rational> age;  // present iff determinant = 1
};

// Finite matrix group, closed by breadth-first products from its generators.
// Element 0 is the identity.  All entries are stored at one shared conductor
// (the lcm over the generators), which makes the hash key exact and products
// conductor-stable.  Immutable after close(); lazily computed survey/class
// data is cached behind a shared pointer, so copies share it.
class FiniteMatrixGroup {
 public:
  static constexpr int kDefaultMaxOrder = 10000;

  static FiniteMatrixGroup close(std::vector<SquareMatrix> generators, int rank,
                                 int max_order = kDefaultMaxOrder);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int conductor() const { return conductor_; }
  const SquareMatrix& element(int i) const { return elems_[i]; }
  const std::vector<SquareMatrix>& elements() const { return elems_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  // Index of an arbitrary matrix, by value; nullopt if not an element.
  std::optional<int> index_of(const SquareMatrix& m) const;
  int product_index(int i, int j) const;
  int inverse_index(int i) const;

  const ElementSurvey& survey() const;
  const std::vector<ConjClass>& classes() const;

 private:
  FiniteMatrixGroup() = default;

  int rank_ = 0;
  int conductor_ = 1;
  std::vector<SquareMatrix> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> gen_idx_;

  struct Caches;
  std::shared_ptr<Caches> caches_;
};

// Rank is taken from the first generator; the list must be nonempty.
FiniteMatrixGroup close_group(std::vector<SquareMatrix> generators,
                              int max_order = FiniteMatrixGroup::kDefaultMaxOrder);
FiniteMatrixGroup trivial_group(int rank);

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& G);

// dim ker(g - I), computed two independent ways and cross-checked: kernel rank
// by exact elimination, and the trace average (1/r) sum_k tr(g^k).  The checks
// are always on; disagreement throws InternalMismatch.
int fixed_dim(const SquareMatrix& g, int order_cap = FiniteMatrixGroup::kDefaultMaxOrder);

// Number of conjugacy classes per fixed dimension 0..rank.
std::vector<int> fixed_dim_profile(const FiniteMatrixGroup& G);

FiniteMatrixGroup sl_part(const FiniteMatrixGroup& G);

// age of a determinant-1 element: eigenvalue multiplicities m_a of zeta_r^a
// recovered as m_a = (1/r) sum_k zeta_r^{-ak} tr(g^k), result sum_a (a/r) m_a.
Rational age(const SquareMatrix& g, int order_cap = FiniteMatrixGroup::kDefaultMaxOrder);

int junior_class_count(const FiniteMatrixGroup& H);

// Shared helper: order of g plus tr(g^k) for k = 0..r-1 (t[0] = rank).
std::pair<int, std::vector<CycNumber>> order_and_traces(const SquareMatrix& g, int order_cap);

namespace detail {
int kernel_rank_dim(const SquareMatrix& g);
int fixed_dim_from_traces(int rank, int order, const std::vector<CycNumber>& traces);
Rational age_from_traces(int rank, int order, const std::vector<CycNumber>& traces,
                         const std::vector<CycNumber>* zeta_powers, int expected_fixed_dim);
}  // namespace detail

}  // namespace reflgrp
