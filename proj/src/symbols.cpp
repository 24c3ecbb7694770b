#include "symbols.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace ramcc {

SymbolSum sym_add(const SymbolSum& a, const SymbolSum& b) {
  if (a.q != b.q) fail(Err::VariableMismatch, "mixing cyclotomic orders in symbol sums");
  SymbolSum r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

SymbolSum sym_scale(const SymbolSum& a, const CycInt& c) {
  SymbolSum r = a;
  for (auto& [co, sym] : r.terms) co = co * c;
  return r;
}

SymbolSum sym_neg(const SymbolSum& a) {
  SymbolSum r = a;
  for (auto& [co, sym] : r.terms) co = -co;
  return r;
}

bool CanonicalForm::operator==(const CanonicalForm& o) const {
  if (p != o.p || q != o.q) return false;
  if (!cyc_mod(torsion - o.torsion, p - 1 > 1 ? p - 1 : 1).is_zero()) return false;
  if (!(e_t == o.e_t) || !(e_dh == o.e_dh)) return false;
  return fac == o.fac;
}

bool CanonicalForm::is_zero() const {
  if (p > 2 && !cyc_mod(torsion, p - 1).is_zero()) return false;
  return fac.empty() && e_t.is_zero() && e_dh.is_zero();
}

std::string CanonicalForm::str() const {
  std::string s = "{torsion " + torsion.str();
  for (auto& [f, e] : fac) s += ", [" + f.str("u") + "]^(" + e.str() + ")";
  s += ", [t]^(" + e_t.str() + "), [dh]^(" + e_dh.str() + ")}";
  return s;
}

CanonicalForm canonicalize(const SymbolSum& s, int p, int top_deg, uint64_t seed) {
  CanonicalForm f;
  f.p = p;
  f.q = s.q;
  f.top_deg = top_deg;
  f.torsion = CycInt(s.q);
  f.e_t = CycInt(s.q);
  f.e_dh = CycInt(s.q);
  auto add_factors = [&](const Poly& poly, const CycInt& coeff, int sign) {
    if (poly.deg() < 1) return;
    for (auto& g : poly_factor(poly, seed)) {
      auto it = f.fac.find(g.f);
      CycInt add = cyc_scale(coeff, (long long)g.mult * sign);
      if (it == f.fac.end())
        f.fac.emplace(g.f, add);
      else
        it->second = it->second + add;
    }
  };
  for (auto& [coeff, sym] : s.terms) {
    if (coeff.is_zero()) continue;
    if (sym.unit.is_zero()) fail(Err::Internal, "graded symbol with zero unit");
    f.e_t = f.e_t + cyc_scale(coeff, sym.e_t);
    f.e_dh = f.e_dh + cyc_scale(coeff, sym.e_dh);
    int lc = sym.unit.num.lead();  // den is monic, so the unit scalar is num's lead
    if (p > 2 && lc != 1) f.torsion = f.torsion + cyc_scale(coeff, fp_dlog(lc, p));
    add_factors(sym.unit.num, coeff, 1);
    add_factors(sym.unit.den, coeff, -1);
  }
  if (p > 2) f.torsion = cyc_mod(f.torsion, p - 1);
  for (auto it = f.fac.begin(); it != f.fac.end();)
    it = it->second.is_zero() ? f.fac.erase(it) : std::next(it);
  return f;
}

static CanonicalForm form_combine(const CanonicalForm& a, const CanonicalForm& b,
                                  const CycInt& sg) {
  if (a.p != b.p || a.q != b.q) fail(Err::VariableMismatch, "mixing canonical forms");
  CanonicalForm r = a;
  r.torsion = r.torsion + b.torsion * sg;
  if (a.p > 2) r.torsion = cyc_mod(r.torsion, a.p - 1);
  r.e_t = r.e_t + b.e_t * sg;
  r.e_dh = r.e_dh + b.e_dh * sg;
  for (auto& [f, e] : b.fac) {
    auto it = r.fac.find(f);
    if (it == r.fac.end())
      r.fac.emplace(f, e * sg);
    else
      it->second = it->second + e * sg;
  }
  for (auto it = r.fac.begin(); it != r.fac.end();)
    it = it->second.is_zero() ? r.fac.erase(it) : std::next(it);
  return r;
}

CanonicalForm form_add(const CanonicalForm& a, const CanonicalForm& b) {
  return form_combine(a, b, CycInt::from_int(a.q, 1));
}
CanonicalForm form_sub(const CanonicalForm& a, const CanonicalForm& b) {
  return form_combine(a, b, CycInt::from_int(a.q, -1));
}
CanonicalForm form_scale(const CanonicalForm& a, const BigInt& k) {
  CanonicalForm zero = a;
  zero.torsion = CycInt(a.q);
  zero.e_t = CycInt(a.q);
  zero.e_dh = CycInt(a.q);
  zero.fac.clear();
  return form_combine(zero, a, CycInt::from_int(a.q, k));
}

SymbolSum sym_sG(const RamificationData& d, int elt, int q) {
  SymbolSum r;
  r.q = q;
  CycInt one = CycInt::from_int(q, 1);
  auto add_sigma = [&](int i, const CycInt& coeff) {
    r.add(coeff, {d.dh_unit, 0, d.dh_weight});       // [dh'] in top coordinates
    r.add(-coeff, {d.uval[i], d.jump[i], 0});        // -[h - sigma(h)]
  };
  if (elt != 0) {
    add_sigma(elt, one);
  } else {
    for (int i = 1; i < d.size(); ++i) add_sigma(i, -one);
  }
  return r;
}

SymbolSum kato_different_sum(const RamificationData& d, int q) { return sym_sG(d, 0, q); }

CanonicalForm kato_different(const RamificationData& d, int q) {
  if (q == 0) q = group_exponent(d);
  return canonicalize(kato_different_sum(d, q), d.p, d.deg * d.dh_weight);
}

SymbolSum sym_epsilon(int p, int q, int xi_exp) {
  if (q % p != 0) fail(Err::BadInput, "epsilon needs p | q");
  SymbolSum r;
  r.q = q;
  for (int s = 1; s < p; ++s) {
    long long e = (long long)(q / p) * xi_exp % q * s % q;
    r.add(CycInt::zeta_pow(q, e), {RatFun::constant(p, s, Var::u), 0, 0});
  }
  return r;
}

// q is the cyclotomic order used for coefficients; it must be a multiple of
// the group exponent (the top-level caller may force a common order so that
// forms from different levels compare).
static SwanResult swan_impl(const RamificationData& d, const VirtualRep& m, int xi_exp,
                            bool assert_shift, int q) {
  int dim = rep_dim(d, m);
  BigInt inner = rep_inner_one(d, m);
  CycInt dimc = CycInt::from_int(q, dim);
  SymbolSum sum;
  sum.q = q;
  for (int i = 1; i < d.size(); ++i) {
    CycInt w = rep_trace(d, m, i, q) - dimc;  // folds s_G(1) tr(1) into the sum
    if (w.is_zero()) continue;
    sum = sym_add(sum, sym_scale(sym_sG(d, i, q), w));
  }
  CycInt mval = CycInt::from_int(q, BigInt(dim) - inner);
  sum = sym_add(sum, sym_scale(sym_epsilon(d.p, q, xi_exp), mval));
  SwanResult r;
  r.form = canonicalize(sum, d.p, d.deg * d.dh_weight);
  r.dim = dim;
  r.inner1 = inner;

  if (assert_shift && d.p > 2) {
    SwanResult s2 = swan_impl(d, m, 2 * xi_exp, false, q);
    SymbolSum shift;
    shift.q = q;
    shift.add(CycInt::from_int(q, BigInt(dim) - inner), {RatFun::constant(d.p, 2, Var::u), 0, 0});
    CanonicalForm want = form_add(r.form, canonicalize(shift, d.p, d.deg * d.dh_weight));
    if (!(s2.form == want)) fail(Err::Internal, "xi-shift law violated");
  }
  return r;
}

static int rep_cyc_order(const RamificationData& d, const VirtualRep& m) {
  int q = group_exponent(d);
  for (auto& t : m.terms) {
    if (t.theta.q % d.p != 0 && t.theta.q != 1)
      fail(Err::BadInput, "character order is not a power of p");
    q = std::lcm(q, t.theta.q);
  }
  return q;
}

SwanResult swan_diffval(const RamificationData& d, const VirtualRep& m, int xi_exp) {
  return swan_impl(d, m, xi_exp, xi_exp == 1, rep_cyc_order(d, m));
}

CanonicalForm swan_rank1_closed(const RamificationData& d, const Character& chi, int psi_exp) {
  validate_character(d, chi);
  if (int(chi.H.size()) != d.size())
    fail(Err::BadInput, "rank-1 closed form needs a character of the whole group");
  if (!is_wild(d, chi)) fail(Err::CharacterNotWild, "character is trivial on G^c");
  int q = chi.q;
  int tau = tau_lift(d, chi, psi_exp);
  UPoly fc{RatFun::one(d.p, Var::u)};
  for (int i : d.gc)
    if (chibar_on(d, chi, i, psi_exp) == 0)
      fc = upoly_mul(fc, UPoly{d.uval[i], RatFun::one(d.p, Var::u)});
  RatFun val = upoly_eval(fc, d.uval[tau]);
  RatFun neg_fp = -ratfun_pow(val, d.p);
  if (neg_fp.is_zero()) fail(Err::Internal, "fbar_{c,chi}(u_tau) vanished");

  SymbolSum sum;
  sum.q = q;
  CycInt one = CycInt::from_int(q, 1);
  sum.add(one, {RatFun::one(d.p, Var::u), d.c, 0});
  sum.add(one, {neg_fp, 0, 0});
  for (int i = 1; i < d.size(); ++i)
    if (!d.in_gc[i]) sum.add(one, {d.uval[i], 0, 0});
  // [d abar0] = deg [dh'] at this level
  sum.add(-one, {ratfun_pow(d.dh_unit, d.deg), 0, d.deg * d.dh_weight});
  return canonicalize(sum, d.p, d.deg * d.dh_weight);
}

CanonicalForm swan_via_induction(const RamificationData& d, const Character& theta, int xi_exp) {
  validate_character(d, theta);
  int q = std::lcm(group_exponent(d), theta.q);
  RamificationData sub = subgroup_data(d, theta.H);
  Character th;
  th.q = theta.q;
  for (int i = 0; i < sub.size(); ++i) th.H.push_back(i);
  th.expo.assign(sub.size(), 0);
  for (size_t i = 0; i < theta.H.size(); ++i) th.expo[sub.parent_proj[theta.H[i]]] = theta.expo[i];
  VirtualRep rep;
  rep.terms.push_back({1, th});

  SwanResult inner = swan_impl(sub, rep, xi_exp, false, q);
  BigInt mth = BigInt(1) - inner.inner1;  // dim theta - <theta, 1>
  SymbolSum corr;
  corr.q = q;
  std::set<int> hs(theta.H.begin(), theta.H.end());
  for (int i = 1; i < d.size(); ++i) {
    if (hs.count(i)) continue;
    corr = sym_add(corr, sym_sG(d, i, q));
  }
  CanonicalForm corrf = canonicalize(corr, d.p, d.deg * d.dh_weight);
  CanonicalForm swh = inner.form;
  swh.top_deg = d.deg * d.dh_weight;
  CanonicalForm diff = form_sub(swh, form_scale(corrf, mth));
  return form_scale(diff, d.size() / int(theta.H.size()));
}

IntegralityReport integrality_check(const CanonicalForm& f) {
  IntegralityReport r;
  auto flag = [&](const std::string& w) {
    r.ok = false;
    if (r.witness.empty()) r.witness = w;
  };
  if (f.p > 2 && !cyc_is_rational_mod(f.torsion, f.p - 1))
    flag("torsion class has irrational cyclotomic coefficients");
  if (!f.e_t.is_rational()) flag("[t]-coefficient is not a rational integer");
  if (!f.e_dh.is_rational()) flag("[dh]-coefficient is not a rational integer");
  if (f.e_dh.is_rational() && f.e_dh.rational() % f.top_deg != 0)
    flag("[dh]-coefficient " + f.e_dh.rational().str() + " is not divisible by p^n");
  for (auto& [q_, e] : f.fac) {
    if (!e.is_rational()) {
      flag("factor [" + q_.str("u") + "] has an irrational coefficient");
      continue;
    }
    if (e.rational() % f.top_deg != 0)
      flag("factor [" + q_.str("u") + "]^" + e.rational().str() + " lies outside F^x");
  }
  return r;
}

KccResult kcc(const RamificationData& d, const VirtualRep& m, int xi_exp, bool via_induction) {
  int dim = rep_dim(d, m);
  BigInt inner = rep_inner_one(d, m);
  CanonicalForm sw;
  if (via_induction) {
    std::optional<CanonicalForm> acc;
    for (auto& term : m.terms) {
      CanonicalForm one = swan_via_induction(d, term.theta, xi_exp);
      CanonicalForm sc = form_scale(one, term.mult);
      acc = acc ? form_add(*acc, sc) : sc;
    }
    if (!acc) fail(Err::BadInput, "empty virtual representation");
    sw = *acc;
  } else {
    sw = swan_impl(d, m, xi_exp, false, rep_cyc_order(d, m)).form;
  }
  auto integ = integrality_check(sw);
  if (!integ.ok) fail(Err::IntegralityFailure, "Swan conductor escapes S_{K,L}: " + integ.witness);
  KccResult r;
  r.sw = sw;
  if (!sw.e_t.is_rational()) fail(Err::NonIntegerConductorPart, "conductor part is irrational");
  r.c = int(sw.e_t.rational().convert_to<long long>());
  BigInt mm = BigInt(dim) - inner;
  r.m = int(mm.convert_to<long long>());
  int modulus = d.deg * d.dh_weight;
  BigInt want_dh = -mm * modulus;
  if (sw.e_dh.rational() != want_dh)
    fail(Err::IntegralityFailure, "[dh]-exponent " + sw.e_dh.rational().str() +
                                      " does not match -m p^n = " + want_dh.str());
  int p = d.p;
  RatFun delta = RatFun::one(p, Var::x);
  if (p > 2) {
    BigInt tor = sw.torsion.c[0] % (p - 1);
    if (tor < 0) tor += (p - 1);
    delta = RatFun::constant(p, fp_pow(fp_generator(p), tor.convert_to<long long>(), p), Var::x);
  }
  for (auto& [q_, e] : sw.fac) {
    BigInt k = e.rational() / modulus;
    delta = delta * ratfun_pow(RatFun::from_poly(q_, Var::x), k.convert_to<long long>());
  }
  RatFun da0 = ratfun_derivative(d.abar0);
  if (da0.is_zero()) fail(Err::Internal, "d abar0 = 0; spec validation should prevent this");
  r.tensor = DiffTensor{delta * ratfun_pow(da0, r.m), r.m};
  return r;
}

void quotient_check(const RamificationData& d, const RamificationData& quot) {
  if (quot.parent_proj.empty() || int(quot.parent_proj.size()) != d.size())
    fail(Err::BadInput, "quotient data lacks the projection from the parent");
  int q = std::lcm(group_exponent(d), group_exponent(quot));
  for (int tau = 1; tau < quot.size(); ++tau) {
    SymbolSum rhs;
    rhs.q = q;
    for (int i = 0; i < d.size(); ++i)
      if (quot.parent_proj[i] == tau) rhs = sym_add(rhs, sym_sG(d, i, q));
    CanonicalForm lhs = canonicalize(sym_sG(quot, tau, q), d.p, d.deg * d.dh_weight);
    CanonicalForm rhsf = canonicalize(rhs, d.p, d.deg * d.dh_weight);
    if (!(lhs == rhsf))
      fail(Err::IdentityViolated,
           "s_{G/H}(tau) != sum of s_G over the coset (tau = " + std::to_string(tau) + ")");
  }
  for (auto& phi : all_characters(quot)) {
    Character infl;
    infl.q = phi.q;
    for (int i = 0; i < d.size(); ++i) infl.H.push_back(i);
    for (int i = 0; i < d.size(); ++i) infl.expo.push_back(phi.value_exp(quot.parent_proj[i]));
    VirtualRep mq, mg;
    mq.terms.push_back({1, phi});
    mg.terms.push_back({1, infl});
    CanonicalForm a = swan_impl(quot, mq, 1, false, q).form;
    CanonicalForm b = swan_impl(d, mg, 1, false, q).form;
    if (!(a == b))
      fail(Err::IdentityViolated, "sw of an inflated character differs from the quotient sw");
  }
}

bool canonical_unit_invariant(const CanonicalForm& f, int a, int b, int c, int dd, uint64_t seed) {
  int p = f.p;
  CycInt torsion = f.torsion;
  std::map<Poly, CycInt, PolyLess> fac;
  for (auto& [q_, e] : f.fac) {
    // q((a u + b)/(c u + d)) * (c u + d)^deg
    Poly num(p, {b, a}), den(p, {dd, c});
    Poly acc = Poly::zero(p);
    Poly npow = Poly::constant(p, 1);
    std::vector<Poly> dpow(q_.deg() + 1, Poly::constant(p, 1));
    for (int i = 1; i <= q_.deg(); ++i) dpow[i] = dpow[i - 1] * den;
    for (int i = 0; i <= q_.deg(); ++i) {
      acc = acc + scalar_mul(npow * dpow[q_.deg() - i], q_.coeff(i));
      npow = npow * num;
    }
    if (acc.deg() != q_.deg()) return false;  // substitution dropped degree: not invariant
    if (p > 2 && acc.lead() != 1) torsion = torsion + cyc_scale(e, fp_dlog(acc.lead(), p));
    for (auto& g : poly_factor(acc, seed)) {
      auto it = fac.find(g.f);
      CycInt add = cyc_scale(e, g.mult);
      if (it == fac.end())
        fac.emplace(g.f, add);
      else
        it->second = it->second + add;
    }
  }
  for (auto it = fac.begin(); it != fac.end();)
    it = it->second.is_zero() ? fac.erase(it) : std::next(it);
  if (!(fac == f.fac)) return false;
  if (p > 2 && !cyc_mod(torsion - f.torsion, p - 1).is_zero()) return false;
  return true;
}

}  // namespace ramcc
