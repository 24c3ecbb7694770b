#ifndef RAMCC_GFP_HPP
#define RAMCC_GFP_HPP

#include <cstdint>

#include "error.hpp"

// Arithmetic in GF(p) on plain ints in [0, p). The modulus is passed
// explicitly; polynomials and rational functions carry it once.

namespace ramcc {

constexpr int kMaxPrime = 97;

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime) fail(Err::NotPrime, "p = " + std::to_string(p) + " (need a prime <= 97)");
}

inline int fp_norm(long long a, int p) {
  long long r = a % p;
  return int(r < 0 ? r + p : r);
}
inline int fp_add(int a, int b, int p) { return (a + b) % p; }
inline int fp_sub(int a, int b, int p) { return (a - b + p) % p; }
inline int fp_neg(int a, int p) { return a == 0 ? 0 : p - a; }
inline int fp_mul(int a, int b, int p) { return int((long long)a * b % p); }

inline int fp_pow(int a, long long e, int p) {
  if (e < 0) e = e % (p - 1) + (p - 1);  // a != 0 assumed for negative exponents
  int r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline int fp_inv(int a, int p) {
  if (a % p == 0) fail(Err::DivisionByZero, "inverse of 0 in GF(p)");
  return fp_pow(a, p - 2, p);
}

inline int fp_div(int a, int b, int p) { return fp_mul(a, fp_inv(b, p), p); }

// Smallest primitive root mod p; the fixed generator of F_p^x used by
// canonical symbol forms.
inline int fp_generator(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    int m = p - 1;
    for (int d = 2; d * d <= m && ok; ++d)
      if (m % d == 0) {
        if (fp_pow(g, (p - 1) / d, p) == 1) ok = false;
        while (m % d == 0) m /= d;
      }
    if (ok && m > 1 && fp_pow(g, (p - 1) / m, p) == 1) ok = false;
    if (ok) return g;
  }
  fail(Err::Internal, "no primitive root found");
}

// Discrete log of a w.r.t. the fixed generator, in [0, p-1). Desk-scale p.
inline int fp_dlog(int a, int p) {
  if (a % p == 0) fail(Err::DivisionByZero, "dlog of 0");
  int g = fp_generator(p), cur = 1;
  for (int k = 0; k < p - 1; ++k) {
    if (cur == a % p) return k;
    cur = fp_mul(cur, g, p);
  }
  fail(Err::Internal, "dlog not found");
}

}  // namespace ramcc

#endif
