#include "abbes_saito.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace ramcc {

int slope_of_character(const RamificationData& d, const Character& chi) {
  validate_character(d, chi);
  if (int(chi.H.size()) != d.size())
    fail(Err::BadInput, "slope_of_character expects a character of the whole group");
  std::vector<int> ker = character_kernel(d, chi);
  return quotient_conductor(d, ker);
}

std::vector<int> upper_subgroup(const RamificationData& d, int r) {
  std::vector<int> out;
  auto chars = all_characters(d);
  std::vector<int> slopes;
  for (auto& chi : chars) slopes.push_back(slope_of_character(d, chi));
  for (int sigma = 0; sigma < d.size(); ++sigma) {
    bool killed = true;
    for (size_t i = 0; i < chars.size() && killed; ++i)
      if (slopes[i] < r && chars[i].value_exp(sigma) % chars[i].q != 0) killed = false;
    if (killed) out.push_back(sigma);
  }
  return out;
}

SlopeDecomposition decompose(const RamificationData& d, const VirtualRep& m, int psi_exp) {
  // expand into characters of G (abelian) and group by slot
  std::map<std::vector<int>, int> char_mult;  // expo vector of a G-character -> mult
  std::map<std::vector<int>, Character> char_of;
  for (auto& term : m.terms) {
    validate_character(d, term.theta);
    for (auto& chi : extensions_to_G(d, term.theta)) {
      char_mult[chi.expo] += term.mult;
      char_of.emplace(chi.expo, chi);
    }
  }
  SlopeDecomposition out;
  out.dim = rep_dim(d, m);
  std::map<std::pair<int, std::vector<int>>, SlopeDecomposition::Slot> slots;
  for (auto& [expo, mult] : char_mult) {
    if (mult == 0) continue;
    const Character& chi = char_of.at(expo);
    int r = slope_of_character(d, chi);
    if (r == 0) {
      out.slope0 += mult;
      continue;
    }
    std::vector<int> gr = upper_subgroup(d, r);
    std::vector<int> key;
    for (int sigma : gr) key.push_back(chibar_on(d, chi, sigma, psi_exp));
    auto it = slots.find({r, key});
    if (it == slots.end())
      slots.emplace(std::make_pair(r, key), SlopeDecomposition::Slot{r, key, mult, chi});
    else
      it->second.mult += mult;
  }
  int check = out.slope0;
  for (auto& [k, slot] : slots) {
    if (slot.mult == 0) continue;
    out.slots.push_back(slot);
    check += slot.mult;
  }
  if (check != out.dim) fail(Err::Internal, "slope decomposition dimensions do not add up");
  return out;
}

RefinedSwan rsw_closed_form(const RamificationData& d, const Character& chi, int psi_exp) {
  validate_character(d, chi);
  if (!is_wild(d, chi)) fail(Err::CharacterNotWild, "rsw of a character trivial on G^c");
  int p = d.p;
  auto eval_with_tau = [&](int tau) {
    UPoly fc{RatFun::one(p, Var::u)};
    for (int i : d.gc)
      if (chibar_on(d, chi, i, psi_exp) == 0)
        fc = upoly_mul(fc, UPoly{d.uval[i], RatFun::one(p, Var::u)});
    return ratfun_pow(upoly_eval(fc, d.uval[tau]), p);
  };
  int tau = tau_lift(d, chi, psi_exp);
  RatFun fptau = eval_with_tau(tau);
  // lift independence: any other lift of 1 through chibar gives the same value
  for (int i : d.gc)
    if (i != tau && chibar_on(d, chi, i, psi_exp) == 1) {
      if (!(eval_with_tau(i) == fptau))
        fail(Err::Internal, "fbar_{c,chi}(u_tau) depends on the lift of 1");
      break;
    }
  RatFun outside = RatFun::one(p, Var::u);
  for (int i = 1; i < d.size(); ++i)
    if (!d.in_gc[i]) outside = outside * d.uval[i];
  RatFun da0 = ratfun_derivative(d.abar0);
  if (da0.is_zero()) fail(Err::Internal, "d abar0 vanished");
  RefinedSwan r;
  r.coeff = -fptau * outside * ratfun_pow(d.dh_unit, d.deg) *
            subst_var_pow(da0, d.top_deg, Var::u);
  r.twist = -d.c;
  if (r.coeff.is_zero()) fail(Err::Internal, "rsw coefficient vanished");
  return r;
}

RefinedSwan rsw_for_character(const RamificationData& d, const Character& chi, int psi_exp) {
  validate_character(d, chi);
  if (!is_wild(d, chi)) fail(Err::CharacterNotWild, "rsw of a character trivial on G^c");
  std::vector<int> ker = character_kernel(d, chi);
  if (int(ker.size()) == 1) return rsw_closed_form(d, chi, psi_exp);
  RamificationData quot = quotient_data(d, ker);
  Character cq;
  cq.q = chi.q;
  for (int i = 0; i < quot.size(); ++i) cq.H.push_back(i);
  cq.expo.assign(quot.size(), -1);
  for (int i = 0; i < d.size(); ++i) {
    int tau = quot.parent_proj[i];
    int e = chi.value_exp(i);
    if (cq.expo[tau] >= 0 && cq.expo[tau] != e)
      fail(Err::Internal, "character does not factor through the quotient by its kernel");
    cq.expo[tau] = e;
  }
  return rsw_closed_form(quot, cq, psi_exp);
}

DiffTensor cc(const RamificationData& d, const VirtualRep& m, int psi_exp) {
  SlopeDecomposition dec = decompose(d, m, psi_exp);
  RatFun coeff = RatFun::one(d.p, Var::u);
  int power = 0;
  for (auto& slot : dec.slots) {
    RefinedSwan rs = rsw_for_character(d, slot.witness, psi_exp);
    if (rs.twist + slot.slope != 0)
      fail(Err::Internal, "rsw twist does not cancel against the slope");
    coeff = coeff * ratfun_pow(rs.coeff, slot.mult);
    power += slot.mult;
  }
  if (power != dec.dim - dec.slope0)
    fail(Err::Internal, "cc tensor power mismatch");
  return DiffTensor{coeff, power};
}

CompareReport compare_cc_kcc(const RamificationData& d, const VirtualRep& m, int psi_exp) {
  CompareReport rep;
  rep.cc_tensor = cc(d, m, psi_exp);
  KccResult k = kcc(d, m, psi_exp);
  rep.conductor_part = k.c;
  // embed the Kato tensor coefficient F -> GF(p)(u) for the comparison
  rep.kcc_tensor = DiffTensor{subst_var_pow(k.tensor.coeff, d.top_deg, Var::u), k.tensor.power};
  rep.equal = rep.cc_tensor == rep.kcc_tensor;
  return rep;
}

bool hasse_arf_check(const RamificationData& d, const DiffTensor& cc_tensor) {
  if (cc_tensor.is_zero()) return false;
  return in_power_subfield(cc_tensor.coeff, d.top_deg);
}

DiffTensor cc_induction_check(const RamificationData& d, const Character& theta, int psi_exp) {
  validate_character(d, theta);
  std::set<int> hs(theta.H.begin(), theta.H.end());
  for (int i : d.gc)
    if (!hs.count(i)) fail(Err::BadInput, "inducing subgroup must contain G^c");
  if (!is_wild(d, theta)) fail(Err::CharacterNotWild, "theta is trivial on G^c");
  int index = d.size() / int(theta.H.size());

  // left side: the full pipeline on ind_H^G theta
  VirtualRep ind;
  ind.terms.push_back({1, theta});
  DiffTensor lhs = cc(d, ind, psi_exp);

  // right side: cc of theta over the base L^H plus the explicit correction.
  // Over L^H: rsw(theta) = Delta'_H * d a'_0 tensor pi^{-c'}, and the
  // [G:H]-th tensor power of d a'_0 is identified with d abar0.
  RamificationData sub = subgroup_data(d, theta.H);
  Character th;
  th.q = theta.q;
  for (int i = 0; i < sub.size(); ++i) th.H.push_back(i);
  th.expo.assign(sub.size(), 0);
  for (size_t i = 0; i < theta.H.size(); ++i) th.expo[sub.parent_proj[theta.H[i]]] = theta.expo[i];
  if (!is_wild(sub, th)) fail(Err::CharacterNotWild, "theta is tame over the intermediate field");
  int p = d.p;
  auto delta_H = [&]() {
    UPoly fc{RatFun::one(p, Var::u)};
    for (int i : sub.gc)
      if (chibar_on(sub, th, i, psi_exp) == 0)
        fc = upoly_mul(fc, UPoly{sub.uval[i], RatFun::one(p, Var::u)});
    int tau = tau_lift(sub, th, psi_exp);
    RatFun fptau = ratfun_pow(upoly_eval(fc, sub.uval[tau]), p);
    RatFun outside = RatFun::one(p, Var::u);
    for (int i = 1; i < sub.size(); ++i)
      if (!sub.in_gc[i]) outside = outside * sub.uval[i];
    return -fptau * outside;
  }();
  RatFun da0_u = subst_var_pow(ratfun_derivative(d.abar0), d.top_deg, Var::u);
  RatFun prod_outside_H = RatFun::one(p, Var::u);
  for (int i = 1; i < d.size(); ++i)
    if (!hs.count(i)) prod_outside_H = prod_outside_H * d.uval[i];
  RatFun rhs_coeff = ratfun_pow(delta_H, index) * ratfun_pow(da0_u, index) /
                     ratfun_pow(prod_outside_H, index);
  DiffTensor rhs{rhs_coeff, index};

  if (!(lhs == rhs))
    fail(Err::IdentityViolated, "cc induction identity fails: lhs " + lhs.str() + " rhs " +
                                    rhs.str());
  return lhs;
}

void factorization_check(const RamificationData& d, const Character& chi, int psi_exp) {
  validate_character(d, chi);
  if (!is_wild(d, chi)) fail(Err::CharacterNotWild, "factorization check needs a wild character");
  int p = d.p;
  UPoly fc{RatFun::one(p, Var::u)};
  for (int i : d.gc)
    if (chibar_on(d, chi, i, psi_exp) == 0)
      fc = upoly_mul(fc, UPoly{d.uval[i], RatFun::one(p, Var::u)});
  int tau = tau_lift(d, chi, psi_exp);
  RatFun outside = RatFun::one(p, Var::u);
  for (int i = 1; i < d.size(); ++i)
    if (!d.in_gc[i]) outside = outside * d.uval[i];
  RatFun fv = upoly_eval(fc, d.uval[tau]);
  // ftilde(Z) = outside * (Z^p - fbar^{p-1}(u_tau) Z); compose with fbar
  UPoly comp(p * int(fc.size() - 1) + 1, RatFun::zero(p, Var::u));
  // fbar^p: additive, so raise each coefficient to p and spread exponents
  UPoly fcp(p * int(fc.size() - 1) + 1, RatFun::zero(p, Var::u));
  for (size_t i = 0; i < fc.size(); ++i)
    if (!fc[i].is_zero()) fcp[i * p] = ratfun_pow(fc[i], p);
  for (size_t i = 0; i < fcp.size(); ++i) comp[i] = outside * fcp[i];
  RatFun lin = outside * ratfun_pow(fv, p - 1);
  for (size_t i = 0; i < fc.size(); ++i) comp[i] = comp[i] - lin * fc[i];
  upoly_trim(comp);
  if (!upoly_equal(comp, d.fbar_c))
    fail(Err::IdentityViolated, "ftilde(fbar_{c,chi}) != fbar_c");
}

}  // namespace ramcc
