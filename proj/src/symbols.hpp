#ifndef RAMCC_SYMBOLS_HPP
#define RAMCC_SYMBOLS_HPP

#include <map>
#include <optional>
#include <string>

#include "characters.hpp"

namespace ramcc {

// A unit of the graded algebra E<m_L/m_L^2, Omega^1_{E/F}>: a nonzero
// element of E times t^{e_t} (dh)^{e_dh} in additive notation.
struct GradedSymbol {
  RatFun unit;  // var u, nonzero
  int e_t = 0;
  int e_dh = 0;
};

// Z[zeta_q]-combination of graded symbols.
struct SymbolSum {
  int q = 2;
  std::vector<std::pair<CycInt, GradedSymbol>> terms;

  void add(const CycInt& coeff, const GradedSymbol& sym) { terms.push_back({coeff, sym}); }
};

SymbolSum sym_add(const SymbolSum& a, const SymbolSum& b);
SymbolSum sym_scale(const SymbolSum& a, const CycInt& c);
SymbolSum sym_neg(const SymbolSum& a);

// Canonical presentation of S_{L/K} tensor Z[zeta_q]: the unit part of
// E^x decomposed through unique factorization in GF(p)[u] with the
// F_p^x-torsion tracked modulo p-1 against the fixed generator.
struct CanonicalForm {
  int p = 0;
  int q = 2;
  int top_deg = 1;                       // p^n of the ambient extension
  CycInt torsion;                        // class modulo (p-1)Z[zeta_q]
  std::map<Poly, CycInt, PolyLess> fac;  // monic irreducible in u -> exponent
  CycInt e_t, e_dh;

  bool operator==(const CanonicalForm& o) const;
  bool is_zero() const;
  std::string str() const;
};

CanonicalForm canonicalize(const SymbolSum& s, int p, int top_deg, uint64_t seed = 0x5eed);
CanonicalForm form_add(const CanonicalForm& a, const CanonicalForm& b);
CanonicalForm form_sub(const CanonicalForm& a, const CanonicalForm& b);
CanonicalForm form_scale(const CanonicalForm& a, const BigInt& k);

// s_G(sigma) = [dh] - [h - sigma(h)] for sigma != 1; s_G(1) = -sum of the
// others. Uses the level's [dh'] = [dh_unit] + dh_weight [dh].
SymbolSum sym_sG(const RamificationData& d, int elt, int q);

// Kato's different d(L/K) = s_G(1), canonicalized.
CanonicalForm kato_different(const RamificationData& d, int q = 0);
SymbolSum kato_different_sum(const RamificationData& d, int q);

// epsilon(xi^r) = sum over s in F_p^x of [s] (x) xi^{r s}.
SymbolSum sym_epsilon(int p, int q, int xi_exp);

// Swan conductor with differential values of a virtual representation:
// sw = sum_sigma s_G(sigma) tr(sigma) + (dim - <chi,1>) epsilon(xi).
// xi_exp selects xi = psi0(1)^{xi_exp}. Asserts the xi-shift law when p > 2.
struct SwanResult {
  CanonicalForm form;
  int dim = 0;
  BigInt inner1;
};
SwanResult swan_diffval(const RamificationData& d, const VirtualRep& m, int xi_exp = 1);

// The closed rank-1 form: [pi^c] + [-fbar^p_{c,chi}(u_tau)] +
// sum over G - G^c of [u_sigma] - [d abar0]; chi a character of G wild on
// G^c, psi_exp the psi0 convention.
CanonicalForm swan_rank1_closed(const RamificationData& d, const Character& chi, int psi_exp = 1);

// Induction route for sw: [G:H] (sw_H(theta) - (dim - <theta,1>) *
// sum over G - H of ([dh] - [h - sigma(h)])).
CanonicalForm swan_via_induction(const RamificationData& d, const Character& theta, int xi_exp = 1);

// Membership in S_{K,L}: rational coefficients, unit part in F^x times
// F_p^x, [dh]-exponent divisible by p^n.
struct IntegralityReport {
  bool ok = true;
  std::string witness;
};
IntegralityReport integrality_check(const CanonicalForm& f);

// kcc_xi(chi) = Delta' (d abar0)^m extracted from sw = [pi^c] + [Delta'] -
// m [d abar0]. The tensor coefficient lives in F (variable x).
struct KccResult {
  DiffTensor tensor;  // coefficient in x
  int c = 0;          // [t]-part
  int m = 0;
  CanonicalForm sw;
};
KccResult kcc(const RamificationData& d, const VirtualRep& m, int xi_exp = 1,
              bool via_induction = false);

// Verifies s_{G/H}(tau) = sum over preimages and sw(inflation) = sw(quotient)
// for every quotient element and character; IdentityViolated on failure.
void quotient_check(const RamificationData& d, const RamificationData& quot);

// Unramified-descent invariance: the unit part of the canonical form must be
// fixed by u -> (a u + b)/(c u + d).
bool canonical_unit_invariant(const CanonicalForm& f, int a, int b, int c, int dd,
                              uint64_t seed = 0x5eed);

}  // namespace ramcc

#endif
