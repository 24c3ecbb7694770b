#include <doctest.h>

#include <random>

#include "cyclotomic.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

using namespace ramcc;

namespace {

Poly rand_poly(int p, int maxdeg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(0, p - 1);
  int d = dd(rng);
  std::vector<int> c(d + 1);
  for (auto& v : c) v = dc(rng);
  return Poly(p, std::move(c));
}

RatFun rand_ratfun(int p, std::mt19937_64& rng, Var var = Var::x) {
  Poly num = rand_poly(p, 4, rng);
  Poly den = rand_poly(p, 3, rng);
  while (den.is_zero()) den = rand_poly(p, 3, rng);
  return RatFun(var, num, den);
}

// Exhaustive trial division by all monic polynomials of degree <= 2:
// the independent factorization oracle for small cases.
std::vector<std::pair<Poly, int>> factor_by_trial(const Poly& f) {
  int p = f.p;
  Poly rest = poly_monic(f);
  std::vector<std::pair<Poly, int>> out;
  for (int deg = 1; deg <= 2; ++deg) {
    std::vector<int> idx(deg, 0);
    for (;;) {
      std::vector<int> c(idx);
      c.push_back(1);
      Poly cand(p, std::move(c));
      bool is_irred = true;
      if (deg == 2)
        for (int r = 0; r < p && is_irred; ++r)
          if (poly_eval(cand, r) == 0) is_irred = false;
      if (is_irred) {
        int m = 0;
        while (rest.deg() >= deg && poly_mod(rest, cand).is_zero()) {
          rest = poly_exact_div(rest, cand);
          ++m;
        }
        if (m) out.push_back({cand, m});
      }
      int i = 0;
      for (; i < deg; ++i) {
        if (++idx[i] < p) break;
        idx[i] = 0;
      }
      if (i == deg) break;
    }
  }
  REQUIRE(rest.is_one());
  return out;
}

}  // namespace

TEST_CASE("prime field basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
  CHECK(fp_generator(3) == 2);
  CHECK(fp_generator(5) == 2);
  CHECK(fp_dlog(3, 5) == 3);  // 2^3 = 8 = 3
  CHECK(fp_inv(3, 7) == 5);
}

TEST_CASE("ratfun_normalize examples") {
  // (x^2 - 1, x - 1) over GF(3) -> x + 1
  RatFun a(Var::x, Poly(3, {-1, 0, 1}), Poly(3, {-1, 1}));
  CHECK(a.num == Poly(3, {1, 1}));
  CHECK(a.den.is_one());

  // (0, x) -> 0/1
  RatFun z(Var::x, Poly::zero(5), Poly::variable(5));
  CHECK(z.is_zero());
  CHECK(z.den.is_one());

  // (2x, 2) over GF(5) -> x/1, checked by the cross-multiplication oracle
  RatFun c(Var::x, Poly(5, {0, 2}), Poly(5, {2}));
  Poly lhs = c.num * Poly(5, {2});          // normalized numerator * raw denominator
  Poly rhs = c.den * Poly(5, {0, 2});       // normalized denominator * raw numerator
  CHECK(lhs == rhs);
  CHECK(c.num == Poly::variable(5));
  CHECK(c.den.is_one());

  CHECK_THROWS_AS(RatFun(Var::x, Poly::variable(5), Poly::zero(5)), Error);
}

TEST_CASE("ratfun field axioms randomized") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int it = 0; it < 60; ++it) {
      RatFun a = rand_ratfun(p, rng), b = rand_ratfun(p, rng), c = rand_ratfun(p, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) {
        CHECK(a * ratfun_inv(a) == RatFun::one(p));
        CHECK(a / a == RatFun::one(p));
      }
      CHECK(a - a == RatFun::zero(p));
    }
  }
}

TEST_CASE("variable tags never mix") {
  RatFun ax = RatFun::variable(3, Var::x);
  RatFun bu = RatFun::variable(3, Var::u);
  CHECK_THROWS_AS(ax + bu, Error);
  CHECK_THROWS_AS(ax * bu, Error);
}

TEST_CASE("poly_factor spec examples") {
  // x^2 + 1 over GF(2) = (x+1)^2
  auto f1 = poly_factor(Poly(2, {1, 0, 1}));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].f == Poly(2, {1, 1}));
  CHECK(f1[0].mult == 2);

  // x over GF(7)
  auto f2 = poly_factor(Poly::variable(7));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].f == Poly::variable(7));
  CHECK(f2[0].mult == 1);

  // x^4 + x over GF(3), against the exhaustive trial-division oracle
  Poly f(3, {0, 1, 0, 0, 1});
  auto got = poly_factor(f);
  auto want = factor_by_trial(f);
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].f == want[i].first);
    CHECK(got[i].mult == want[i].second);
  }

  CHECK_THROWS_AS(poly_factor(Poly::zero(3)), Error);
}

TEST_CASE("poly_factor round-trip randomized") {
  std::mt19937_64 rng(11);
  int count = 0;
  for (int p : {2, 3, 5, 7, 13, 97}) {
    for (int it = 0; it < 90; ++it) {
      Poly f = rand_poly(p, 12, rng);
      if (f.is_zero()) continue;
      ++count;
      auto fac = poly_factor(f, 1234 + it);
      Poly prod = Poly::constant(p, f.lead());
      for (auto& [g, m] : fac) {
        CHECK(g.is_monic());
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod == f);
      for (size_t i = 1; i < fac.size(); ++i) CHECK(poly_less(fac[i - 1].f, fac[i].f));
    }
  }
  CHECK(count >= 500);
}

TEST_CASE("pn_th_root") {
  // x -> u for n = 1
  CHECK(pn_th_root(RatFun::variable(2), 1) == RatFun::variable(2, Var::u));
  // (x^2 + x) over GF(2), n = 1 -> u^2 + u; oracle: raise to p, substitute u^p -> x
  RatFun f(Var::x, Poly(2, {0, 1, 1}), Poly(2, {1}));
  RatFun g = pn_th_root(f, 1);
  RatFun gp = ratfun_pow(g, 2);
  CHECK(contract_power_subfield(gp, 2, Var::x) == f);
  // 1 -> 1
  CHECK(pn_th_root(RatFun::one(5), 3) == RatFun::one(5, Var::u));

  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5})
    for (int n : {1, 2})
      for (int it = 0; it < 25; ++it) {
        RatFun f = rand_ratfun(p, rng);
        if (f.is_zero()) continue;
        RatFun g = pn_th_root(f, n);
        int q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        CHECK(contract_power_subfield(ratfun_pow(g, q), q, Var::x) == f);
      }
}

TEST_CASE("differential") {
  // d(x) = 1 dx
  DiffTensor d1 = differential(RatFun::variable(5));
  CHECK(d1.coeff == RatFun::one(5));
  CHECK(d1.power == 1);
  // d(x^p) = 0
  CHECK(differential(RatFun(Var::x, poly_pow(Poly::variable(5), 5), Poly(5, {1}))).is_zero());
  // d(x^3 + x) over GF(5) = (3x^2 + 1) dx; oracle: finite difference with eps^2 = 0,
  // i.e. (f(x+eps)-f(x))/eps in GF(5)[x][eps]/(eps^2)
  Poly f(5, {0, 1, 0, 1});
  // f(x + eps) = sum c_i (x+eps)^i; the eps-coefficient is sum c_i * i * x^{i-1}
  Poly fd = Poly::zero(5);
  for (int i = 1; i <= f.deg(); ++i) {
    // expand (x+eps)^i mod eps^2 = x^i + i x^{i-1} eps
    Poly term = scalar_mul(Poly::monomial(5, 1, i - 1), fp_norm(i, 5));
    fd = fd + scalar_mul(term, f.c[i]);
  }
  DiffTensor d3 = differential(RatFun::from_poly(f));
  CHECK(d3.coeff == RatFun::from_poly(fd));
  CHECK(d3.coeff == RatFun::from_poly(Poly(5, {1, 0, 3})));

  // Leibniz and the kernel of d on random inputs
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5})
    for (int it = 0; it < 40; ++it) {
      RatFun a = rand_ratfun(p, rng), b = rand_ratfun(p, rng);
      CHECK(differential(a * b).coeff == (a * differential(b).coeff + b * differential(a).coeff));
      RatFun ap = ratfun_pow(a, p);
      CHECK(differential(ap).is_zero());
      RatFun xf = RatFun::variable(p) * ap;
      CHECK(differential(xf).coeff == ap);
    }
}

TEST_CASE("cyclotomic integers") {
  for (int q : {2, 3, 5, 9}) {
    CycInt z = CycInt::zeta_pow(q, 1);
    CycInt prod = CycInt::from_int(q, 1);
    for (int i = 0; i < q; ++i) prod = prod * z;
    CHECK(prod == CycInt::from_int(q, 1));  // zeta^q = 1
    // Phi_q(zeta) = 0: for q = p^m, sum_{j<p} zeta^{j p^{m-1}}
    int p = 2;
    while (q % p != 0) ++p;
    CycInt phi(q);
    for (int j = 0; j < p; ++j) phi = phi + CycInt::zeta_pow(q, (long long)j * (q / p));
    CHECK(phi.is_zero());
  }
  // arithmetic sanity in Z[zeta_3]: (1+z)(1+z^2) = 1 + z + z^2 + 1 = 1
  CycInt z = CycInt::zeta_pow(3, 1);
  CycInt a = CycInt::from_int(3, 1) + z;
  CycInt b = CycInt::from_int(3, 1) + z * z;
  CHECK(a * b == CycInt::from_int(3, 1));
  CHECK(cyc_div_exact(cyc_scale(a, 6), 3) == cyc_scale(a, 2));
  CHECK_THROWS_AS(cyc_div_exact(a, 2), Error);
  // torsion reduction: -2*zeta = 0 mod 2
  CycInt t = cyc_scale(z, -2);
  CHECK(cyc_mod(t, 2).is_zero());
}

TEST_CASE("power subfield membership") {
  RatFun h(Var::u, Poly(3, {0, 1}), Poly(3, {1}));          // u
  RatFun x(Var::u, Poly(3, {0, 0, 0, 1}), Poly(3, {1}));    // u^3
  CHECK(!in_power_subfield(h, 3));
  CHECK(in_power_subfield(x, 3));
  CHECK(contract_power_subfield(x, 3, Var::x) == RatFun::variable(3));
  // x/(x+1) as a u-function: u^3/(u^3+1)
  RatFun w(Var::u, Poly(3, {0, 0, 0, 1}), Poly(3, {1, 0, 0, 1}));
  CHECK(in_power_subfield(w, 3));
  CHECK(!in_power_subfield(w * h, 3));
}
