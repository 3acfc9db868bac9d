#include "reflgrp/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflgrp {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// Exact division of integer polynomials, ascending coefficients, b monic.
std::vector<Int> exact_div(std::vector<Int> a, const std::vector<Int>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int dq = static_cast<int>(a.size()) - 1 - db;
  std::vector<Int> q(dq + 1);
  for (int i = dq; i >= 0; --i) {
    Int c = a[i + db];
    q[i] = c;
    if (c != 0)
      for (int j = 0; j <= db; ++j) a[i + j] -= c * b[j];
  }
  for (const Int& r : a)
    if (r != 0) throw InternalMismatch("cyclotomic polynomial division left a remainder");
  return q;
}

std::recursive_mutex g_phi_mutex;
std::map<int, std::vector<Int>> g_phi_cache;

const std::vector<Int>& phi_locked(int n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  std::vector<Int> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly.assign(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d : divisors(n))
      if (d != n) poly = exact_div(std::move(poly), phi_locked(d));
  }
  return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

// Per-conductor reduction data: Phi_n plus x^k mod Phi_n for every power a
// multiplication or promotion into this conductor can produce.
struct ConductorTable {
  int n = 0;
  int deg = 0;
  std::vector<std::vector<Int>> xpow;
};

std::mutex g_table_mutex;
std::map<int, ConductorTable> g_table_cache;

const ConductorTable& conductor_table(int n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_table_cache.find(n);
  if (it != g_table_cache.end()) return it->second;

  ConductorTable t;
  t.n = n;
  const std::vector<Int> phi = cyclotomic_polynomial(n);
  t.deg = static_cast<int>(phi.size()) - 1;
  const int kmax = std::max(2 * t.deg - 2, n - 1);
  t.xpow.resize(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    std::vector<Int>& row = t.xpow[k];
    row.assign(t.deg, 0);
    if (k < t.deg) {
      row[k] = 1;
      continue;
    }
    const std::vector<Int>& prev = t.xpow[k - 1];
    // x * prev, then reduce the single overflowing coefficient against Phi_n.
    Int top = prev[t.deg - 1];
    for (int j = t.deg - 1; j > 0; --j) row[j] = prev[j - 1];
    row[0] = 0;
    if (top != 0)
      for (int j = 0; j < t.deg; ++j) row[j] -= top * phi[j];
  }
  return g_table_cache.emplace(n, std::move(t)).first->second;
}

// Reduce an integer polynomial (ascending, any degree the tables cover) into
// the power basis of conductor n.
std::vector<Int> reduce_mod_phi(int n, const std::vector<Int>& c) {
  const ConductorTable& t = conductor_table(n);
  std::vector<Int> r(t.deg, 0);
  const int top = static_cast<int>(c.size()) - 1;
  for (int k = 0; k <= top && k < t.deg; ++k) r[k] = c[k];
  for (int k = t.deg; k <= top; ++k) {
    if (c[k] == 0) continue;
    const std::vector<Int>& row = t.xpow[k];
    for (int j = 0; j < t.deg; ++j) r[j] += c[k] * row[j];
  }
  return r;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
  if (n < 1) throw BadParameter("cyclotomic polynomial index must be >= 1");
  std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
  return phi_locked(n);
}

CycNumber::CycNumber(int cond, std::vector<Int> num, Int den)
    : cond_(cond), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNumber::CycNumber(const Rational& r)
    : cond_(1), num_(1, reflgrp::numerator(r)), den_(reflgrp::denominator(r)) {}

void CycNumber::normalize() {
  Int content = den_;
  for (const Int& v : num_) {
    if (v != 0) content = gcd(content, boost::multiprecision::abs(v));
    if (content == 1) break;
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const Int& v) { return v == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (content > 1) {
    for (Int& v : num_) v /= content;
    den_ /= content;
  }
}

CycNumber CycNumber::zeta(int n, int k) {
  if (n < 1) throw BadParameter("conductor must be >= 1");
  k %= n;
  if (k < 0) k += n;
  const ConductorTable& t = conductor_table(n);
  return CycNumber(n, t.xpow[k], 1);
}

CycNumber CycNumber::from_coeffs(int n, const std::vector<Rational>& coeffs) {
  if (static_cast<int>(coeffs.size()) != euler_phi(n))
    throw BadParameter("coefficient list length must equal phi(conductor)");
  Int den = 1;
  for (const Rational& c : coeffs) den = lcm(den, reflgrp::denominator(c));
  std::vector<Int> num(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    num[i] = reflgrp::numerator(coeffs[i]) * (den / reflgrp::denominator(coeffs[i]));
  return CycNumber(n, std::move(num), std::move(den));
}

bool CycNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Int& v) { return v == 0; });
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw NotRational();
  return Rational(num_[0], den_);
}

CycNumber CycNumber::promoted(int m) const {
  if (m == cond_) return *this;
  if (m < cond_ || m % cond_ != 0)
    throw BadParameter("promotion target must be a multiple of the conductor");
  const int stride = m / cond_;
  std::vector<Int> poly((num_.size() - 1) * stride + 1, 0);
  for (size_t i = 0; i < num_.size(); ++i) poly[i * stride] = num_[i];
  return CycNumber(m, reduce_mod_phi(m, poly), den_);
}

std::optional<CycNumber> CycNumber::demoted(int m) const {
  if (m == cond_) return *this;
  if (m < 1 || cond_ % m != 0) throw BadParameter("demotion target must divide the conductor");
  const int dm = euler_phi(m);
  const int dn = static_cast<int>(num_.size());

  // Solve sum_j b_j * promote(x^j) = this over Q.
  std::vector<std::vector<Rational>> aug(dn, std::vector<Rational>(dm + 1));
  for (int j = 0; j < dm; ++j) {
    CycNumber base = zeta(m, j).promoted(cond_);
    for (int i = 0; i < dn; ++i) aug[i][j] = base.coeff(i);
  }
  for (int i = 0; i < dn; ++i) aug[i][dm] = coeff(i);

  std::vector<int> pivot_col(dn, -1);
  int row = 0;
  for (int col = 0; col < dm && row < dn; ++col) {
    int p = row;
    while (p < dn && aug[p][col] == 0) ++p;
    if (p == dn) continue;
    std::swap(aug[p], aug[row]);
    Rational inv = aug[row][col];
    for (int j = col; j <= dm; ++j) aug[row][j] /= inv;
    for (int i = 0; i < dn; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (int j = col; j <= dm; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int i = row; i < dn; ++i)
    if (aug[i][dm] != 0) return std::nullopt;  // inconsistent: value not in Q(zeta_m)

  std::vector<Rational> sol(dm, Rational(0));
  for (int i = 0; i < row; ++i) sol[pivot_col[i]] = aug[i][dm];
  return from_coeffs(m, sol);
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, may carry trailing zeros

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Remainder-and-quotient division over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  const int db = qdeg(b);
  QPoly q(std::max<size_t>(a.size(), 1), Rational(0));
  for (int da = qdeg(a); da >= db; da = qdeg(a)) {
    Rational f = a[da] / b[db];
    q[da - db] = f;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
  }
  return {q, a};
}

QPoly qsub_mul(const QPoly& t0, const QPoly& q, const QPoly& t1) {
  QPoly r(std::max(t0.size(), q.size() + t1.size()), Rational(0));
  for (size_t i = 0; i < t0.size(); ++i) r[i] = t0[i];
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (size_t j = 0; j < t1.size(); ++j) r[i + j] -= q[i] * t1[j];
  }
  return r;
}

}  // namespace

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid of the representing polynomial against Phi_n over Q;
  // Phi_n is squarefree and the class is nonzero, so the gcd is a constant.
  const std::vector<Int>& phi = cyclotomic_polynomial(cond_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) r1[i] = Rational(num_[i], den_);
  QPoly t0{Rational(0)}, t1{Rational(1)};
  while (qdeg(r1) > 0) {
    auto [q, r] = qdivmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly tn = qsub_mul(t0, q, t1);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (qdeg(r1) != 0) throw InternalMismatch("nonzero cyclotomic value shares a factor with Phi_n");
  Rational c = r1[qdeg(r1)];
  std::vector<Rational> out(num_.size(), Rational(0));
  for (size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = t1[i] / c;
  for (size_t i = out.size(); i < t1.size(); ++i)
    if (t1[i] != 0) throw InternalMismatch("inverse cofactor degree exceeds phi(n)");
  return from_coeffs(cond_, out);
}

std::string CycNumber::key() const {
  std::ostringstream os;
  os << cond_ << ';' << den_.str();
  for (const Int& v : num_) os << ',' << v.str();
  return os.str();
}

CycNumber CycNumber::operator-() const {
  std::vector<Int> num = num_;
  for (Int& v : num) v = -v;
  return CycNumber(cond_, std::move(num), den_);
}

namespace {

int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  const int m = common_conductor(a.cond_, b.cond_);
  if (a.cond_ != m) return a.promoted(m) + b;
  if (b.cond_ != m) return a + b.promoted(m);
  std::vector<Int> num(a.num_.size());
  for (size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CycNumber(m, std::move(num), a.den_ * b.den_);
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  const int m = common_conductor(a.cond_, b.cond_);
  if (a.cond_ != m) return a.promoted(m) * b;
  if (b.cond_ != m) return a * b.promoted(m);
  std::vector<Int> conv(a.num_.size() + b.num_.size() - 1, 0);
  for (size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      conv[i + j] += a.num_[i] * b.num_[j];
    }
  }
  return CycNumber(m, reduce_mod_phi(m, conv), a.den_ * b.den_);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.cond_ == b.cond_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int m = common_conductor(a.cond_, b.cond_);
  return a.promoted(m) == b.promoted(m);
}

}  // namespace reflgrp
