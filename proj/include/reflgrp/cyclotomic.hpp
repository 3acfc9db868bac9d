#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflgrp/errors.hpp"
#include "reflgrp/rational.hpp"

namespace reflgrp {

int euler_phi(int n);
std::vector<int> divisors(int n);

// Phi_N as ascending integer coefficients, monic, degree euler_phi(N).
// Built by exact division of x^N - 1 by Phi_d over the proper divisors d | N.
const std::vector<Int>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N) = Q[x]/(Phi_N), power basis 1, x, ..., x^{phi(N)-1},
// x standing for zeta_N = exp(2*pi*i/N).  Stored as an integer coefficient
// vector over a single positive denominator with content gcd 1, which keeps
// multiplication an integer convolution.  Binary operations promote both sides
// to the lcm conductor; values are immutable once constructed.
class CycNumber {
 public:
  CycNumber() : cond_(1), num_(1, 0), den_(1) {}
  CycNumber(const Rational& r);
  CycNumber(long v) : CycNumber(Rational(v)) {}
  CycNumber(int v) : CycNumber(Rational(v)) {}

  // zeta_n^k
  static CycNumber zeta(int n, int k = 1);
  static CycNumber from_coeffs(int n, const std::vector<Rational>& coeffs);

  int conductor() const { return cond_; }
  int degree() const { return static_cast<int>(num_.size()); }
  const std::vector<Int>& numerators() const { return num_; }
  const Int& denominator() const { return den_; }
  Rational coeff(int i) const { return Rational(num_[i], den_); }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws NotRational

  CycNumber promoted(int m) const;                // conductor() | m
  std::optional<CycNumber> demoted(int m) const;  // m | conductor(); nullopt if not in Q(zeta_m)

  CycNumber inverse() const;  // throws DivisionByZero

  // Exact textual form at the current conductor; canonical for values that
  // share a conductor (group hashing promotes first).
  std::string key() const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
  CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

 private:
  CycNumber(int cond, std::vector<Int> num, Int den);

  void normalize();

  int cond_;
  std::vector<Int> num_;
  Int den_;
};

inline CycNumber cyc_inverse(const CycNumber& a) { return a.inverse(); }
inline Rational cyc_to_rational(const CycNumber& a) { return a.to_rational(); }

}  // namespace reflgrp
