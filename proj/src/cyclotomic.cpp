#include "cyclotomic.hpp"

#include "error.hpp"
#include "gfp.hpp"

namespace ramcc {

static int prime_of(int q) {
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) return d;
  fail(Err::Internal, "bad cyclotomic order");
}

static void check_order(int q) {
  if (q < 2) fail(Err::BadInput, "cyclotomic order must be >= 2");
  int p = prime_of(q);
  int m = q;
  while (m % p == 0) m /= p;
  if (m != 1) fail(Err::BadInput, "cyclotomic order must be a prime power");
}

int CycInt::phi(int q) {
  int p = prime_of(q);
  return q - q / p;
}

CycInt::CycInt(int q_) : q(q_) {
  check_order(q);
  c.assign(phi(q), 0);
}

CycInt CycInt::from_int(int q, const BigInt& v) {
  CycInt r(q);
  r.c[0] = v;
  return r;
}

// Reduce a coefficient vector of length up to 2*phi(q) modulo Phi_q.
// Phi_{p^m}(X) = sum_{j<p} X^{j p^{m-1}}.
static CycInt reduce(int q, std::vector<BigInt> v) {
  int p = prime_of(q);
  int n = CycInt::phi(q);
  int step = q / p;  // p^{m-1}
  // first fold exponents >= q via X^q = 1
  if (int(v.size()) > q) {
    for (int i = q; i < int(v.size()); ++i) v[i - q] += v[i];
    v.resize(q);
  }
  while (int(v.size()) > n) {
    int d = int(v.size()) - 1;
    BigInt lead = v.back();
    v.pop_back();
    if (lead == 0) continue;
    // X^d = X^{d-n} * X^n, X^n = -sum_{j<p-1} X^{j*step}
    for (int j = 0; j < p - 1; ++j) v[d - n + j * step] -= lead;
  }
  CycInt r;
  r.q = q;
  v.resize(n, 0);
  r.c = std::move(v);
  return r;
}

CycInt CycInt::zeta_pow(int q, long long k) {
  check_order(q);
  int e = int(((k % q) + q) % q);
  std::vector<BigInt> v(e + 1, 0);
  v[e] = 1;
  return reduce(q, std::move(v));
}

bool CycInt::is_zero() const {
  for (auto& v : c)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

BigInt CycInt::rational() const {
  if (!is_rational()) fail(Err::Internal, "rational() on a non-rational cyclotomic integer");
  return c[0];
}

static void check_same_order(const CycInt& a, const CycInt& b) {
  if (a.q != b.q) fail(Err::VariableMismatch, "mixing cyclotomic orders");
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  CycInt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  CycInt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

CycInt operator-(const CycInt& a) {
  CycInt r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  std::vector<BigInt> v(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  }
  return reduce(a.q, std::move(v));
}

CycInt cyc_scale(const CycInt& a, const BigInt& s) {
  CycInt r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

CycInt cyc_div_exact(const CycInt& a, const BigInt& d) {
  if (d == 0) fail(Err::DivisionByZero, "cyclotomic division by zero");
  CycInt r = a;
  for (auto& v : r.c) {
    if (v % d != 0) fail(Err::NonIntegralInnerProduct, "inner product is not a cyclotomic integer");
    v /= d;
  }
  return r;
}

CycInt cyc_mod(const CycInt& a, const BigInt& m) {
  if (m <= 0) fail(Err::Internal, "cyc_mod with nonpositive modulus");
  CycInt r = a;
  for (auto& v : r.c) {
    v %= m;
    if (v < 0) v += m;
  }
  return r;
}

bool cyc_is_rational_mod(const CycInt& a, const BigInt& m) {
  if (m == 1) return true;
  for (size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i] % m != 0) return false;
  return true;
}

std::string CycInt::str() const {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) s += " + ";
    s += c[i].str();
    if (i >= 1) s += "*z" + (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace ramcc
