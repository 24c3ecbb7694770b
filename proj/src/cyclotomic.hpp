#ifndef RAMCC_CYCLOTOMIC_HPP
#define RAMCC_CYCLOTOMIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace ramcc {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[zeta_q], q = p^m, in the power basis 1, zeta, ...,
// zeta^{phi(q)-1} modulo the q-th cyclotomic polynomial. Coefficients are
// big integers; representation is always fully reduced.
struct CycInt {
  int q = 2;
  std::vector<BigInt> c;  // length phi(q)

  CycInt() : c(1, 0) {}
  explicit CycInt(int q_);

  static int phi(int q);
  static CycInt from_int(int q, const BigInt& v);
  static CycInt zeta_pow(int q, long long k);

  bool is_zero() const;
  bool is_rational() const;      // lies in Z
  BigInt rational() const;       // requires is_rational()
  bool operator==(const CycInt& o) const { return q == o.q && c == o.c; }
  std::string str() const;
};

CycInt operator+(const CycInt& a, const CycInt& b);
CycInt operator-(const CycInt& a, const CycInt& b);
CycInt operator-(const CycInt& a);
CycInt operator*(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const CycInt& a, const BigInt& s);

// Exact division by a rational integer; throws NonIntegralInnerProduct when
// some coordinate is not divisible.
CycInt cyc_div_exact(const CycInt& a, const BigInt& d);

// Coordinatewise reduction modulo m (canonical representative in [0, m)),
// i.e. the image in Z[zeta_q]/(m).
CycInt cyc_mod(const CycInt& a, const BigInt& m);

// True iff a is congruent to a rational integer modulo m.
bool cyc_is_rational_mod(const CycInt& a, const BigInt& m);

}  // namespace ramcc

#endif
