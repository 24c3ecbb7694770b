#include "extension.hpp"

#include <algorithm>

#include "error.hpp"

namespace ramcc {

int ExtensionSpec::default_precision(int p, int n, const std::vector<Laurent>& coeffs) {
  int deg = 1;
  for (int i = 0; i < n; ++i) deg *= p;
  int maxv = 0;
  for (int i = 0; i < int(coeffs.size()) && i < deg; ++i)
    if (!coeffs[i].looks_zero()) maxv = std::max(maxv, coeffs[i].valuation());
  return 4 * deg * (1 + maxv) + 8;
}

std::shared_ptr<const ExtensionSpec> ExtensionSpec::make(int p, int n, std::vector<Laurent> coeffs,
                                                         int precision) {
  check_prime(p);
  if (n < 1) fail(Err::BadInput, "extension degree exponent n must be >= 1");
  auto spec = std::make_shared<ExtensionSpec>();
  spec->p = p;
  spec->n = n;
  spec->deg = 1;
  for (int i = 0; i < n; ++i) {
    spec->deg *= p;
    if (spec->deg > 4096) fail(Err::BadInput, "extension degree too large");
  }
  if (int(coeffs.size()) != spec->deg + 1) fail(Err::BadInput, "need p^n + 1 coefficients");
  spec->prec = precision > 0 ? precision : default_precision(p, n, coeffs);

  // monic
  const Laurent& lead = coeffs[spec->deg];
  if (lead.c.size() != 1 || lead.c.begin()->first != 0 || !lead.c.begin()->second.is_one())
    fail(Err::BadInput, "f must be monic of degree p^n");

  for (int i = 0; i <= spec->deg; ++i) {
    if (!coeffs[i].looks_zero() && coeffs[i].valuation() < 0)
      fail(Err::BadInput, "coefficient a_" + std::to_string(i) + " is not integral");
    // coefficients keep their own (possibly exact) precision; the working
    // precision caps computations, not the input data
    coeffs[i].p = p;
  }

  // residue of f must be T^{p^n} + abar0 with -abar0 not a p-th power:
  // this is exactly f mod m = (T - hbar)^{p^n} with hbar generating E/F.
  for (int i = 1; i < spec->deg; ++i)
    if (!coeffs[i].coeff(0).is_zero())
      fail(Err::BadInput, "residue of a_" + std::to_string(i) +
                              " must vanish (type (II) requires purely inseparable residue)");
  spec->abar0 = coeffs[0].coeff(0);
  RatFun neg_abar0 = -spec->abar0;
  if (neg_abar0.is_zero() || in_power_subfield(neg_abar0, p))
    fail(Err::BadInput, "abar0 has a p-th root in F; the residue extension degenerates");
  spec->hbar = pn_th_root(neg_abar0, n);
  spec->f = std::move(coeffs);

  // rank check: the residues 1, hbar, ..., hbar^{p^n-1} are F-independent
  std::vector<RatFun> probe;
  if (!express_in_E(spec, spec->embed_F(spec->abar0), probe))
    fail(Err::Internal, "hbar powers fail to span E");
  return spec;
}

static void check_spec(const OrderElt& a, const OrderElt& b) {
  if (a.spec != b.spec) fail(Err::BadInput, "order elements from different extensions");
}

OrderElt OrderElt::zero(const SpecPtr& s) {
  OrderElt r;
  r.spec = s;
  r.c.assign(s->deg, Laurent::zero(s->p, s->prec));
  return r;
}

OrderElt OrderElt::one(const SpecPtr& s) {
  OrderElt r = zero(s);
  r.c[0] = Laurent::constant(RatFun::one(s->p), s->prec);
  return r;
}

OrderElt OrderElt::h(const SpecPtr& s) {
  OrderElt r = zero(s);
  if (s->deg == 1) fail(Err::BadInput, "trivial extension has no generator");
  r.c[1] = Laurent::constant(RatFun::one(s->p), s->prec);
  return r;
}

OrderElt OrderElt::from_scalar(const SpecPtr& s, const Laurent& v) {
  OrderElt r = zero(s);
  r.c[0] = v.truncated(s->prec);
  r.c[0].p = s->p;
  return r;
}

bool OrderElt::looks_zero() const {
  for (auto& v : c)
    if (!v.looks_zero()) return false;
  return true;
}

OrderElt operator+(const OrderElt& a, const OrderElt& b) {
  check_spec(a, b);
  OrderElt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

OrderElt operator-(const OrderElt& a, const OrderElt& b) {
  check_spec(a, b);
  OrderElt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

OrderElt operator-(const OrderElt& a) {
  OrderElt r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

OrderElt operator*(const OrderElt& a, const OrderElt& b) {
  check_spec(a, b);
  const auto& spec = *a.spec;
  int deg = spec.deg;
  std::vector<Laurent> work(2 * deg - 1, Laurent::zero(spec.p, spec.prec + 1024));
  for (int i = 0; i < deg; ++i)
    for (int j = 0; j < deg; ++j) work[i + j] = work[i + j] + a.c[i] * b.c[j];
  // reduce modulo the monic f: h^deg = -sum f[i] h^i
  for (int d = 2 * deg - 2; d >= deg; --d) {
    Laurent v = work[d];
    for (int i = 0; i < deg; ++i)
      work[d - deg + i] = work[d - deg + i] - v * spec.f[i];
  }
  OrderElt r;
  r.spec = a.spec;
  r.c.assign(work.begin(), work.begin() + deg);
  for (auto& v : r.c) v = v.truncated(spec.prec);
  return r;
}

OrderElt order_scale(const OrderElt& a, const Laurent& s) {
  OrderElt r = a;
  for (auto& v : r.c) v = (v * s).truncated(a.spec->prec);
  return r;
}

OrderElt order_shift(const OrderElt& a, int k) {
  OrderElt r = a;
  for (auto& v : r.c) v = laurent_shift(v, k).truncated(a.spec->prec);
  return r;
}

OrderElt order_pow(const OrderElt& a, int e) {
  OrderElt r = OrderElt::one(a.spec);
  OrderElt base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

OrderElt order_eval_at(const OrderElt& coords, const OrderElt& at) {
  check_spec(coords, at);
  OrderElt r = OrderElt::zero(coords.spec);
  for (int i = coords.spec->deg - 1; i >= 0; --i)
    r = r * at + OrderElt::from_scalar(coords.spec, coords.c[i]);
  return r;
}

int order_vmin_bound(const OrderElt& a) {
  int m = a.spec->prec;
  for (auto& v : a.c) m = std::min(m, v.vmin_bound());
  return m;
}

int order_valuation(const OrderElt& a) {
  int m = a.spec->prec;
  bool seen = false;
  for (auto& v : a.c)
    if (!v.looks_zero()) {
      m = std::min(m, v.valuation());
      seen = true;
    }
  if (!seen) fail(Err::PrecisionExhausted, "element vanishes up to working precision");
  for (auto& v : a.c)
    if (v.looks_zero() && v.prec <= m)
      fail(Err::PrecisionExhausted, "coordinate precision too low to certify the valuation");
  return m;
}

bool order_same(const OrderElt& a, const OrderElt& b) {
  check_spec(a, b);
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!a.c[i].same_up_to_prec(b.c[i])) return false;
  return true;
}

RatFun residue(const OrderElt& a) {
  const auto& spec = *a.spec;
  RatFun r = RatFun::zero(spec.p, Var::u);
  RatFun hpow = RatFun::one(spec.p, Var::u);
  for (int i = 0; i < spec.deg; ++i) {
    const Laurent& v = a.c[i];
    if (!v.looks_zero() && v.valuation() < 0)
      fail(Err::NotIntegral, "residue of a non-integral element");
    if (v.looks_zero() && v.prec <= 0)
      fail(Err::PrecisionExhausted, "cannot certify integrality");
    r = r + spec.embed_F(v.coeff(0)) * hpow;
    hpow = hpow * spec.hbar;
  }
  return r;
}

bool express_in_E(const SpecPtr& spec, const RatFun& z, std::vector<RatFun>& coords) {
  int p = spec->p, deg = spec->deg;
  // decompose an element of GF(p)(u) over the F-basis 1, u, ..., u^{deg-1}:
  // num/den = num * den^{deg-1} / D(x) with D the denominator read in x
  auto decompose = [&](const RatFun& w) {
    std::vector<RatFun> cls(deg, RatFun::zero(p));
    if (w.is_zero()) return cls;
    Poly numu = w.num * poly_pow(w.den, deg - 1);
    Poly denx = w.den;  // same coefficients, variable x: den(u)^deg = den(x)|_{x=u^deg}
    RatFun dinv = ratfun_inv(RatFun::from_poly(denx, Var::x));
    std::vector<std::vector<int>> parts(deg);
    for (int i = 0; i <= numu.deg(); ++i) {
      int j = i % deg, k = i / deg;
      if (int(parts[j].size()) < k + 1) parts[j].resize(k + 1, 0);
      parts[j][k] = numu.c[i];
    }
    for (int j = 0; j < deg; ++j)
      cls[j] = RatFun::from_poly(Poly(p, parts[j]), Var::x) * dinv;
    return cls;
  };

  // solve sum_i coords[i] * hbar^i = z over F by Gaussian elimination on
  // the u-class decomposition
  std::vector<std::vector<RatFun>> m(deg, std::vector<RatFun>(deg + 1, RatFun::zero(p)));
  RatFun hpow = RatFun::one(p, Var::u);
  for (int i = 0; i < deg; ++i) {
    auto cls = decompose(hpow);
    for (int j = 0; j < deg; ++j) m[j][i] = cls[j];
    hpow = hpow * spec->hbar;
  }
  auto zc = decompose(z);
  for (int j = 0; j < deg; ++j) m[j][deg] = zc[j];

  int row = 0;
  std::vector<int> pivot_of_col(deg, -1);
  for (int col = 0; col < deg && row < deg; ++col) {
    int pr = -1;
    for (int i = row; i < deg; ++i)
      if (!m[i][col].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    RatFun inv = ratfun_inv(m[row][col]);
    for (int j = col; j <= deg; ++j) m[row][j] = m[row][j] * inv;
    for (int i = 0; i < deg; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      RatFun f = m[i][col];
      for (int j = col; j <= deg; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  coords.assign(deg, RatFun::zero(p));
  for (int i = row; i < deg; ++i)
    if (!m[i][deg].is_zero()) return false;  // inconsistent: z outside E
  for (int col = 0; col < deg; ++col)
    if (pivot_of_col[col] >= 0) coords[col] = m[pivot_of_col[col]][deg];
  // the matrix is square invertible for a valid spec, but guard anyway
  RatFun check = RatFun::zero(p, Var::u);
  RatFun hp = RatFun::one(p, Var::u);
  for (int i = 0; i < deg; ++i) {
    check = check + subst_var_pow(coords[i], deg, Var::u) * hp;
    hp = hp * spec->hbar;
  }
  return check == z;
}

OrderElt lift_residue(const SpecPtr& spec, const RatFun& z) {
  std::vector<RatFun> coords;
  if (!express_in_E(spec, z, coords))
    fail(Err::RootsNotFound, "residue element lies outside E");
  OrderElt r = OrderElt::zero(spec);
  for (int i = 0; i < spec->deg; ++i) r.c[i] = Laurent::constant(coords[i], spec->prec);
  return r;
}

OrderElt order_inverse(const OrderElt& a) {
  if (order_valuation(a) != 0) fail(Err::BadInput, "order_inverse expects a unit");
  RatFun r0 = residue(a);
  OrderElt y = lift_residue(a.spec, ratfun_inv(r0));
  OrderElt one = OrderElt::one(a.spec);
  // Newton: y <- y(2 - ay); error valuation doubles each round
  int rounds = 2;
  for (int pr = 1; pr < a.spec->prec; pr *= 2) ++rounds;
  for (int i = 0; i < rounds; ++i) {
    OrderElt e = one - a * y;
    if (e.looks_zero()) break;
    y = y + y * e;
  }
  OrderElt check = one - a * y;
  if (!check.looks_zero()) fail(Err::PrecisionExhausted, "inverse did not converge");
  return y;
}

std::string OrderElt::str() const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].looks_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c[i].str() + ")";
    if (i == 1) s += "*h";
    if (i > 1) s += "*h^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace ramcc
