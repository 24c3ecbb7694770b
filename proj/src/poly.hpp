#ifndef RAMCC_POLY_HPP
#define RAMCC_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gfp.hpp"

namespace ramcc {

// Dense univariate polynomial over GF(p). Invariant: no trailing zero
// coefficient; the zero polynomial has an empty coefficient vector.
struct Poly {
  int p = 0;
  std::vector<int> c;  // c[i] multiplies X^i

  Poly() = default;
  Poly(int p_, std::vector<int> coeffs);

  static Poly zero(int p) { return Poly(p, {}); }
  static Poly constant(int p, int v) { return Poly(p, {fp_norm(v, p)}); }
  static Poly variable(int p) { return Poly(p, {0, 1}); }
  static Poly monomial(int p, int v, int deg);

  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }  // -1 for zero
  int lead() const { return c.empty() ? 0 : c.back(); }
  int coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : 0; }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  bool is_monic() const { return lead() == 1; }

  void trim();
  bool operator==(const Poly& o) const { return p == o.p && c == o.c; }
  std::string str(const std::string& var = "x") const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scalar_mul(const Poly& a, int s);

// Euclidean division: a = q*b + r with deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_exact_div(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0
Poly poly_monic(const Poly& a);
Poly poly_derivative(const Poly& a);
Poly poly_pow(Poly base, long long e);
Poly poly_pow_mod(Poly base, long long e, const Poly& mod);
int poly_eval(const Poly& a, int x0);
Poly poly_subst_pow(const Poly& a, int k);  // X -> X^k
Poly poly_compose(const Poly& a, const Poly& g);

// Deterministic order used wherever factor lists are sorted: by degree,
// then by coefficient vector from the constant term up.
bool poly_less(const Poly& a, const Poly& b);
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

struct PolyFactor {
  Poly f;    // monic irreducible
  int mult;
};

// Full factorization: poly = lc * prod f_i^{m_i}, factors sorted.
// Distinct-degree splitting; equal-degree search is exhaustive below
// degree 4 and seeded Cantor-Zassenhaus above.
std::vector<PolyFactor> poly_factor(const Poly& poly, uint64_t seed = 0x9e3779b9u);

bool poly_is_irreducible(const Poly& f, uint64_t seed = 0x9e3779b9u);

}  // namespace ramcc

#endif
