#include "reflgrp/matrix.hpp"

#include <numeric>
#include <sstream>

namespace reflgrp {

SquareMatrix SquareMatrix::identity(int rank) {
  SquareMatrix m(rank);
  for (int i = 0; i < rank; ++i) m.at(i, i) = CycNumber(1);
  return m;
}

SquareMatrix SquareMatrix::diagonal(std::vector<CycNumber> diag) {
  SquareMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.rank_; ++i) m.at(i, i) = std::move(diag[i]);
  return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<CycNumber>>& rows) {
  SquareMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.rank_; ++i)
    for (int j = 0; j < m.rank_; ++j) m.at(i, j) = rows[i][j];
  return m;
}

int SquareMatrix::conductor_lcm() const {
  int l = 1;
  for (const CycNumber& e : e_) l = std::lcm(l, e.conductor());
  return l;
}

SquareMatrix SquareMatrix::promoted(int m) const {
  SquareMatrix out(rank_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].promoted(m);
  return out;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.at(i, j) = at(j, i);
  return out;
}

CycNumber SquareMatrix::trace() const {
  CycNumber t;
  for (int i = 0; i < rank_; ++i) t += at(i, i);
  return t;
}

CycNumber SquareMatrix::det() const {
  switch (rank_) {
    case 1:
      return at(0, 0);
    case 2:
      return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    default:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }
}

CycNumber SquareMatrix::principal_minor_sum() const {
  switch (rank_) {
    case 1:
      return CycNumber(0);
    case 2:
      return det();
    default:
      return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0) +
             at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0) +
             at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  }
}

SquareMatrix SquareMatrix::inverse() const {
  CycNumber d = det();
  if (d.is_zero()) throw Singular();
  CycNumber dinv = d.inverse();
  SquareMatrix out(rank_);
  switch (rank_) {
    case 1:
      out.at(0, 0) = dinv;
      break;
    case 2:
      out.at(0, 0) = at(1, 1) * dinv;
      out.at(0, 1) = -at(0, 1) * dinv;
      out.at(1, 0) = -at(1, 0) * dinv;
      out.at(1, 1) = at(0, 0) * dinv;
      break;
    default:
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
          const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
          // adjugate entry (i, j): cofactor of (j, i), signs absorbed by the cyclic ordering
          out.at(i, j) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * dinv;
        }
      }
      break;
  }
  return out;
}

bool SquareMatrix::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      if (i == j ? at(i, j) != CycNumber(1) : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::string SquareMatrix::key() const {
  std::ostringstream os;
  os << rank_;
  for (const CycNumber& e : e_) os << '#' << e.key();
  return os.str();
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix out(a.rank_);
  for (int i = 0; i < a.rank_; ++i) {
    for (int j = 0; j < a.rank_; ++j) {
      CycNumber s;
      for (int k = 0; k < a.rank_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(s);
    }
  }
  return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.rank_ != b.rank_) return false;
  for (size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

}  // namespace reflgrp
