#ifndef RAMCC_LAURENT_HPP
#define RAMCC_LAURENT_HPP

#include <map>
#include <string>

#include "ratfun.hpp"

namespace ramcc {

// Truncated Laurent series over F = GF(p)(x) in the uniformizer t.
// Coefficients at exponents >= prec are unknown; stored coefficients are
// nonzero and live at exponents < prec. Precision is always finite: "zero"
// means zero up to the stated precision, never certified zero.
struct Laurent {
  int p = 0;
  std::map<int, RatFun> c;
  int prec = 0;

  static Laurent zero(int p, int prec);
  static Laurent constant(const RatFun& v, int prec);
  static Laurent t_pow(int p, int k, int prec);  // t^k

  bool looks_zero() const { return c.empty(); }

  // Smallest exponent carrying a stored coefficient, or prec when none;
  // a sound lower bound for the valuation in both cases.
  int vmin_bound() const { return c.empty() ? prec : c.begin()->first; }

  // Valuation; PrecisionExhausted when zero up to precision (cannot
  // certify zero versus small).
  int valuation() const;

  RatFun coeff(int k) const;
  void set_coeff(int k, const RatFun& v);
  Laurent truncated(int new_prec) const;

  bool same_up_to_prec(const Laurent& o) const;
  std::string str() const;
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent laurent_scale(const Laurent& a, const RatFun& s);
Laurent laurent_shift(const Laurent& a, int k);  // * t^k

}  // namespace ramcc

#endif
