#pragma once

#include <string>
#include <vector>

#include "reflgrp/cyclotomic.hpp"

namespace reflgrp {

// Dense rank x rank matrix over a cyclotomic field, rank in {1, 2, 3}.
class SquareMatrix {
 public:
  explicit SquareMatrix(int rank) : rank_(rank), e_(rank * rank) {}
  static SquareMatrix identity(int rank);
  static SquareMatrix diagonal(std::vector<CycNumber> diag);
  static SquareMatrix from_rows(const std::vector<std::vector<CycNumber>>& rows);

  int rank() const { return rank_; }
  const CycNumber& at(int i, int j) const { return e_[i * rank_ + j]; }
  CycNumber& at(int i, int j) { return e_[i * rank_ + j]; }

  // lcm of the stored conductors of all entries
  int conductor_lcm() const;
  SquareMatrix promoted(int m) const;

  SquareMatrix transpose() const;
  CycNumber trace() const;
  CycNumber det() const;
  // sum of the 2x2 principal minors (the t^2 coefficient of det(I - t g) at rank 3)
  CycNumber principal_minor_sum() const;
  SquareMatrix inverse() const;  // adjugate over det; throws Singular

  bool is_identity() const;

  // Concatenated entry keys.  Canonical only among matrices whose entries are
  // stored at one shared conductor (close_group arranges exactly that).
  std::string key() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

 private:
  int rank_;
  std::vector<CycNumber> e_;
};

}  // namespace reflgrp
