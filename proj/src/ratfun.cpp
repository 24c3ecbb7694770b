#include "ratfun.hpp"

#include "error.hpp"

namespace ramcc {

RatFun::RatFun(Var v, Poly n, Poly d) : var(v), num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(Err::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(den.p, 1);
    return;
  }
  Poly g = poly_gcd(num, den);
  if (g.deg() > 0) {
    num = poly_exact_div(num, g);
    den = poly_exact_div(den, g);
  }
  int lc = den.lead();
  if (lc != 1) {
    int inv = fp_inv(lc, den.p);
    num = scalar_mul(num, inv);
    den = scalar_mul(den, inv);
  }
}

int RatFun::constant_value() const {
  if (!is_constant()) fail(Err::Internal, "constant_value on a non-constant");
  return num.is_zero() ? 0 : num.c[0];
}

static void check_var(const RatFun& a, const RatFun& b) {
  if (a.var != b.var) fail(Err::VariableMismatch, "mixing x- and u-variables");
  if (a.p() != b.p()) fail(Err::VariableMismatch, "mixing different primes");
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  check_var(a, b);
  return RatFun(a.var, a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
  check_var(a, b);
  return RatFun(a.var, a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFun operator-(const RatFun& a) {
  RatFun r = a;
  r.num = -r.num;
  return r;
}
RatFun operator*(const RatFun& a, const RatFun& b) {
  check_var(a, b);
  return RatFun(a.var, a.num * b.num, a.den * b.den);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
  check_var(a, b);
  if (b.is_zero()) fail(Err::DivisionByZero, "division by zero rational function");
  return RatFun(a.var, a.num * b.den, a.den * b.num);
}

RatFun ratfun_inv(const RatFun& a) {
  if (a.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  return RatFun(a.var, a.den, a.num);
}

RatFun ratfun_pow(const RatFun& a, long long e) {
  if (e < 0) return ratfun_pow(ratfun_inv(a), -e);
  RatFun r = RatFun::one(a.p(), a.var);
  RatFun base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatFun ratfun_derivative(const RatFun& a) {
  // (n/d)' = (n'd - nd')/d^2
  return RatFun(a.var, poly_derivative(a.num) * a.den - a.num * poly_derivative(a.den), a.den * a.den);
}

RatFun pn_th_root(const RatFun& f, int n) {
  if (f.var != Var::x) fail(Err::VariableMismatch, "pn_th_root expects an x-variable input");
  (void)n;  // exponents carry over unchanged for every n >= 0
  return RatFun(Var::u, f.num, f.den);
}

RatFun subst_var_pow(const RatFun& a, int k, Var new_var) {
  return RatFun(new_var, poly_subst_pow(a.num, k), poly_subst_pow(a.den, k));
}

static bool poly_exponents_divisible(const Poly& f, int m) {
  for (int i = 0; i <= f.deg(); ++i)
    if (f.c[i] != 0 && i % m != 0) return false;
  return true;
}

bool in_power_subfield(const RatFun& a, int m) {
  return poly_exponents_divisible(a.num, m) && poly_exponents_divisible(a.den, m);
}

static Poly poly_contract(const Poly& f, int m) {
  if (f.is_zero()) return f;
  std::vector<int> c(f.deg() / m + 1, 0);
  for (int i = 0; i <= f.deg(); ++i)
    if (f.c[i] != 0) c[i / m] = f.c[i];
  return Poly(f.p, std::move(c));
}

RatFun contract_power_subfield(const RatFun& a, int m, Var new_var) {
  if (!in_power_subfield(a, m)) fail(Err::Internal, "element not in the power subfield");
  RatFun r;
  r.var = new_var;
  r.num = poly_contract(a.num, m);
  r.den = poly_contract(a.den, m);
  return r;
}

static int poly_ord0(const Poly& f) {
  for (int i = 0; i <= f.deg(); ++i)
    if (f.c[i] != 0) return i;
  fail(Err::Internal, "ord of zero polynomial");
}

int ratfun_ord0(const RatFun& a) {
  if (a.is_zero()) fail(Err::ZeroTensor, "order of vanishing of 0");
  return poly_ord0(a.num) - poly_ord0(a.den);
}

bool ratfun_less(const RatFun& a, const RatFun& b) {
  if (a.num.deg() != b.num.deg()) return a.num.deg() < b.num.deg();
  if (a.den.deg() != b.den.deg()) return a.den.deg() < b.den.deg();
  if (a.num.c != b.num.c) return a.num.c < b.num.c;
  return a.den.c < b.den.c;
}

std::string RatFun::str() const {
  std::string v(1, char(var));
  if (den.is_one()) return num.str(v);
  return "(" + num.str(v) + ")/(" + den.str(v) + ")";
}

DiffTensor tensor_mul(const DiffTensor& a, const DiffTensor& b) {
  return {a.coeff * b.coeff, a.power + b.power};
}

DiffTensor tensor_pow(const DiffTensor& a, int e) {
  if (e < 0) {
    if (a.is_zero()) fail(Err::DivisionByZero, "negative power of zero tensor");
    return {ratfun_pow(a.coeff, e), a.power * e};
  }
  return {ratfun_pow(a.coeff, e), a.power * e};
}

DiffTensor differential(const RatFun& f) {
  return {ratfun_derivative(f), 1};
}

std::string DiffTensor::str() const {
  std::string base = coeff.var == Var::u ? "du" : "dx";
  if (power == 0) return coeff.str();
  std::string s = "(" + coeff.str() + ")*(" + base + ")";
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

}  // namespace ramcc
