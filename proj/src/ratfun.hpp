#ifndef RAMCC_RATFUN_HPP
#define RAMCC_RATFUN_HPP

#include <string>

#include "poly.hpp"

namespace ramcc {

// Variable tags. "x" is the coordinate of the residue field F = GF(p)(x);
// "u" is the oversize coordinate with u^{p^n} = x. The two never mix in
// arithmetic; crossing is only possible through explicit substitution.
enum class Var : char { x = 'x', u = 'u' };

struct RatFun {
  Var var = Var::x;
  Poly num, den;  // den monic, gcd(num, den) = 1, zero is 0/1

  RatFun() = default;
  RatFun(Var v, Poly n, Poly d);  // normalizes

  static RatFun zero(int p, Var v = Var::x) { return RatFun(v, Poly::zero(p), Poly::constant(p, 1)); }
  static RatFun one(int p, Var v = Var::x) { return RatFun(v, Poly::constant(p, 1), Poly::constant(p, 1)); }
  static RatFun constant(int p, int c, Var v = Var::x) { return RatFun(v, Poly::constant(p, c), Poly::constant(p, 1)); }
  static RatFun variable(int p, Var v = Var::x) { return RatFun(v, Poly::variable(p), Poly::constant(p, 1)); }
  static RatFun from_poly(Poly n, Var v = Var::x) {
    int p = n.p;
    return RatFun(v, std::move(n), Poly::constant(p, 1));
  }

  int p() const { return den.p; }
  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_constant() const { return num.deg() <= 0 && den.is_one(); }
  int constant_value() const;  // requires is_constant()
  bool is_poly() const { return den.is_one(); }

  bool operator==(const RatFun& o) const { return var == o.var && num == o.num && den == o.den; }
  std::string str() const;
};

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a);
RatFun operator*(const RatFun& a, const RatFun& b);
RatFun operator/(const RatFun& a, const RatFun& b);
RatFun ratfun_inv(const RatFun& a);
RatFun ratfun_pow(const RatFun& a, long long e);

// d/dvar, staying in the same variable.
RatFun ratfun_derivative(const RatFun& a);

// f(x) -> g(u) with g(u)^{p^n} = f(u^{p^n}); coefficientwise exponent swap.
RatFun pn_th_root(const RatFun& f, int n);

// Substitute var^k for the variable (x -> u^{p^n} embeds F into GF(p)(u)).
RatFun subst_var_pow(const RatFun& a, int k, Var new_var);

// True iff every exponent of the canonical form is divisible by m, i.e.
// the element lies in GF(p)(var^m).
bool in_power_subfield(const RatFun& a, int m);

// Inverse of subst_var_pow for elements of GF(p)(var^m): divides exponents.
RatFun contract_power_subfield(const RatFun& a, int m, Var new_var);

// Order of vanishing at var = 0 (num order minus den order). ZeroTensor-free:
// requires a != 0.
int ratfun_ord0(const RatFun& a);

// Total ordering for deterministic reports.
bool ratfun_less(const RatFun& a, const RatFun& b);

// One-dimensional differential forms and their tensor powers. A form is
// coeff * (d base)^{\otimes m} with the base differential fixed to dx (or du
// after base change); m = 0 is a plain scalar.
struct DiffTensor {
  RatFun coeff;
  int power = 0;

  static DiffTensor scalar_one(int p, Var v = Var::x) { return {RatFun::one(p, v), 0}; }
  bool is_zero() const { return coeff.is_zero(); }
  bool operator==(const DiffTensor& o) const { return coeff == o.coeff && power == o.power; }
  std::string str() const;
};

DiffTensor tensor_mul(const DiffTensor& a, const DiffTensor& b);
DiffTensor tensor_pow(const DiffTensor& a, int e);

// differential of f in Omega^1: (df/dvar) * dvar, power 1.
DiffTensor differential(const RatFun& f);

}  // namespace ramcc

#endif
