#include "poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "error.hpp"

namespace ramcc {

Poly::Poly(int p_, std::vector<int> coeffs) : p(p_), c(std::move(coeffs)) {
  check_prime(p);
  for (auto& v : c) v = fp_norm(v, p);
  trim();
}

Poly Poly::monomial(int p, int v, int deg) {
  std::vector<int> c(deg + 1, 0);
  c[deg] = fp_norm(v, p);
  return Poly(p, std::move(c));
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

static void check_same_field(const Poly& a, const Poly& b) {
  if (a.p != b.p) fail(Err::VariableMismatch, "polynomials over different primes");
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp_add(r.c[i], b.c[i], a.p);
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp_sub(r.c[i], b.c[i], a.p);
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& v : r.c) v = fp_neg(v, a.p);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.p);
  std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = fp_norm(c[i + j] + (long long)a.c[i] * b.c[j], a.p);
  }
  Poly r;
  r.p = a.p;
  r.c = std::move(c);
  r.trim();
  return r;
}

Poly scalar_mul(const Poly& a, int s) {
  Poly r = a;
  s = fp_norm(s, a.p);
  for (auto& v : r.c) v = fp_mul(v, s, a.p);
  r.trim();
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  check_same_field(a, b);
  if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  int p = a.p;
  q = Poly::zero(p);
  r = a;
  int linv = fp_inv(b.lead(), p);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int d = r.deg() - b.deg();
    int f = fp_mul(r.lead(), linv, p);
    if (int(q.c.size()) < d + 1) q.c.resize(d + 1, 0);
    q.c[d] = fp_add(q.c[d], f, p);
    for (int i = 0; i <= b.deg(); ++i)
      r.c[i + d] = fp_norm(r.c[i + d] - (long long)f * b.c[i], p);
    r.trim();
  }
  q.trim();
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) fail(Err::Internal, "inexact polynomial division");
  return q;
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scalar_mul(a, fp_inv(a.lead(), a.p));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& a) {
  if (a.deg() <= 0) return Poly::zero(a.p);
  std::vector<int> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = fp_norm((long long)a.c[i] * (i % a.p), a.p);
  return Poly(a.p, std::move(c));
}

Poly poly_pow(Poly base, long long e) {
  Poly r = Poly::constant(base.p, 1);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly poly_pow_mod(Poly base, long long e, const Poly& mod) {
  Poly r = Poly::constant(base.p, 1);
  base = poly_mod(base, mod);
  while (e > 0) {
    if (e & 1) r = poly_mod(r * base, mod);
    base = poly_mod(base * base, mod);
    e >>= 1;
  }
  return r;
}

int poly_eval(const Poly& a, int x0) {
  int r = 0;
  x0 = fp_norm(x0, a.p);
  for (int i = a.deg(); i >= 0; --i) r = fp_norm((long long)r * x0 + a.c[i], a.p);
  return r;
}

Poly poly_subst_pow(const Poly& a, int k) {
  if (a.is_zero()) return a;
  std::vector<int> c(size_t(a.deg()) * k + 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i * k] = a.c[i];
  return Poly(a.p, std::move(c));
}

Poly poly_compose(const Poly& a, const Poly& g) {
  Poly r = Poly::zero(a.p);
  for (int i = a.deg(); i >= 0; --i) r = r * g + Poly::constant(a.p, a.c[i]);
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  return a.c < b.c;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i > 0) {
      if (c[i] != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---- factorization ----------------------------------------------------

// f = g(X^p) -> g, valid when f' = 0.
static Poly pth_root_poly(const Poly& f) {
  std::vector<int> c(f.deg() / f.p + 1, 0);
  for (int i = 0; i <= f.deg(); ++i)
    if (f.c[i] != 0) {
      if (i % f.p != 0) fail(Err::Internal, "pth_root_poly: not a p-th power pattern");
      c[i / f.p] = f.c[i];  // GF(p) coefficients are Frobenius-fixed
    }
  return Poly(f.p, std::move(c));
}

// Squarefree part decomposition: returns map exponent -> squarefree monic factor.
static void squarefree_decompose(const Poly& f, int outer_mult, std::map<int, Poly>& out) {
  Poly d = poly_derivative(f);
  if (d.is_zero()) {
    squarefree_decompose(pth_root_poly(f), outer_mult * f.p, out);
    return;
  }
  Poly g = poly_gcd(f, d);
  Poly w = poly_exact_div(f, g);  // product of factors with mult not divisible by p, each once
  int i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, g);
    Poly fac = poly_exact_div(w, y);
    if (fac.deg() > 0) {
      auto [it, fresh] = out.emplace(outer_mult * i, fac);
      if (!fresh) it->second = it->second * fac;
    }
    w = y;
    g = poly_exact_div(g, y);
    ++i;
  }
  if (g.deg() > 0) squarefree_decompose(g, outer_mult, out);
}

// Exhaustive search for an irreducible factor of degree d (d <= 3).
static bool edf_exhaustive(const Poly& f, int d, std::vector<Poly>& out) {
  int p = f.p;
  Poly rest = f;
  if (d == 1) {
    for (int r = 0; r < p && rest.deg() >= 1; ++r) {
      Poly lin(p, {fp_neg(r, p), 1});
      while (rest.deg() >= 1 && poly_mod(rest, lin).is_zero()) {
        out.push_back(lin);
        rest = poly_exact_div(rest, lin);
      }
    }
    return rest.is_one();
  }
  // enumerate monic candidates of degree d in the deterministic order
  std::vector<int> idx(d, 0);
  while (rest.deg() >= d) {
    std::vector<int> c(idx);
    c.push_back(1);
    Poly cand(p, std::move(c));
    bool bump_done = false;
    if (poly_mod(rest, cand).is_zero() && poly_is_irreducible(cand)) {
      while (rest.deg() >= d && poly_mod(rest, cand).is_zero()) {
        out.push_back(cand);
        rest = poly_exact_div(rest, cand);
      }
    }
    for (int i = 0; i < d; ++i) {
      if (++idx[i] < p) { bump_done = true; break; }
      idx[i] = 0;
    }
    if (!bump_done) break;
  }
  return rest.is_one();
}

// Cantor-Zassenhaus split of a product of irreducibles of equal degree d.
static void edf_random(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(poly_monic(f));
    return;
  }
  int p = f.p;
  std::uniform_int_distribution<int> dist(0, p - 1);
  for (;;) {
    std::vector<int> rc(f.deg());
    for (auto& v : rc) v = dist(rng);
    Poly r(p, std::move(rc));
    if (r.deg() < 1) continue;
    Poly g;
    if (p == 2) {
      // trace map sum_{i<d} r^{2^i}
      Poly tr = Poly::zero(p), cur = poly_mod(r, f);
      for (int i = 0; i < d; ++i) {
        tr = tr + cur;
        cur = poly_mod(cur * cur, f);
      }
      g = poly_gcd(tr, f);
    } else {
      // r^{(p^d-1)/2} = prod_{i<d} (r^{(p-1)/2})^{p^i}, avoiding big exponents
      Poly s = poly_pow_mod(r, (p - 1) / 2, f);
      Poly acc = s, cur = s;
      for (int i = 1; i < d; ++i) {
        cur = poly_pow_mod(cur, p, f);
        acc = poly_mod(acc * cur, f);
      }
      g = poly_gcd(acc - Poly::constant(p, 1), f);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf_random(g, d, rng, out);
      edf_random(poly_exact_div(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<PolyFactor> poly_factor(const Poly& poly, uint64_t seed) {
  if (poly.is_zero()) fail(Err::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<PolyFactor> result;
  if (poly.deg() == 0) return result;
  int p = poly.p;
  std::map<int, Poly> sqf;
  squarefree_decompose(poly_monic(poly), 1, sqf);
  std::mt19937_64 rng(seed);
  for (auto& [mult, part] : sqf) {
    // distinct-degree splitting of the squarefree part
    Poly rest = part;
    Poly x = Poly::variable(p);
    Poly xq = x;
    for (int d = 1; !rest.is_one() && d <= rest.deg(); ++d) {
      xq = poly_pow_mod(xq, p, rest);  // X^{p^d} mod rest
      Poly g = poly_gcd(xq - x, rest);
      if (g.deg() > 0) {
        std::vector<Poly> irr;
        if (d < 4) {
          if (!edf_exhaustive(g, d, irr)) fail(Err::Internal, "exhaustive EDF failed");
        } else {
          edf_random(g, d, rng, irr);
        }
        for (auto& f : irr) result.push_back({f, mult});
        rest = poly_exact_div(rest, g);
        xq = poly_mod(xq, rest);
      }
      if (rest.deg() > 0 && 2 * (d + 1) > rest.deg()) {  // remainder is irreducible
        result.push_back({poly_monic(rest), mult});
        rest = Poly::constant(p, 1);
      }
    }
    if (rest.deg() > 0) result.push_back({poly_monic(rest), mult});
  }
  std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return poly_less(a.f, b.f);
  });
  return result;
}

bool poly_is_irreducible(const Poly& f, uint64_t seed) {
  if (f.deg() <= 0) return false;
  if (f.deg() == 1) return true;
  auto fs = poly_factor(f, seed);
  return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace ramcc
