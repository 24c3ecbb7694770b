#ifndef RAMCC_ABBES_SAITO_HPP
#define RAMCC_ABBES_SAITO_HPP

#include "symbols.hpp"

namespace ramcc {

// rsw(chi) as a twisted differential: coeff * dx tensor pi^{twist} with the
// coefficient over GF(p)(u) (the computable part of Omega^1_F tensor Fbar).
struct RefinedSwan {
  RatFun coeff;  // var u, nonzero
  int twist;     // -conductor
};

// Slope and central-character decomposition of the restriction to wild
// inertia, keyed by (slope, chibar values on G^{slope}).
struct SlopeDecomposition {
  struct Slot {
    int slope;
    std::vector<int> chibar;  // values of the induced F_p-character on G^{slope}
    int mult;                 // signed for virtual input
    Character witness;        // a 1-dim character of G realizing the slot
  };
  std::vector<Slot> slots;  // slopes > 0, deterministic order
  int slope0 = 0;           // dimension at slope 0
  int dim = 0;
};

// Conductor of L^{ker chi}/K computed from the quotient jump profile;
// 0 for the trivial character.
int slope_of_character(const RamificationData& d, const Character& chi);

// Upper-numbering subgroup G^r = {sigma : chi(sigma) = 1 for all chi of
// slope < r} (abelian duality).
std::vector<int> upper_subgroup(const RamificationData& d, int r);

SlopeDecomposition decompose(const RamificationData& d, const VirtualRep& m, int psi_exp = 1);

// Closed-form refined Swan conductor of a character of G wild on G^c,
// evaluated at the level of d (slope must equal d.c):
//   rsw(chi) = (-fbar^p_{c,chibar}(u_tau) * prod_{G - G^c} u_sigma)
//              * d abar0 tensor pi^{-c}.
// Lift independence under tau replacement is asserted internally.
RefinedSwan rsw_closed_form(const RamificationData& d, const Character& chi, int psi_exp = 1);

// rsw for an arbitrary wild character, routed through the quotient by its
// kernel; equals rsw_closed_form when the slope is d.c.
RefinedSwan rsw_for_character(const RamificationData& d, const Character& chi, int psi_exp = 1);

// Abbes-Saito characteristic cycle: product over slots of (rsw tensor pi^r).
DiffTensor cc(const RamificationData& d, const VirtualRep& m, int psi_exp = 1);

struct CompareReport {
  DiffTensor cc_tensor;   // coefficient over GF(p)(u)
  DiffTensor kcc_tensor;  // coefficient over F, embedded for comparison
  bool equal = false;
  int conductor_part = 0;  // [t]-part of the Swan conductor
};
CompareReport compare_cc_kcc(const RamificationData& d, const VirtualRep& m, int psi_exp = 1);

// Hasse-Arf membership: the cc coefficient lies in F, i.e. is a rational
// function of u^{p^n}.
bool hasse_arf_check(const RamificationData& d, const DiffTensor& cc_tensor);

// Induction identity for cc (index [G:H], theta a wild character of H):
// cc(ind theta) = cc_{L^H}(theta)^{[G:H]} (x) (d abar0)^{[G:H]-1}
//                 / (prod_{G-H} u_sigma)^{[G:H]}.
// Both sides computed independently; IdentityViolated with a witness on
// mismatch. Returns the common tensor.
DiffTensor cc_induction_check(const RamificationData& d, const Character& theta, int psi_exp = 1);

// The section-9.3 factorization ftilde_{c,chi}(fbar_{c,chi}(T)) = fbar_c(T).
void factorization_check(const RamificationData& d, const Character& chi, int psi_exp = 1);

}  // namespace ramcc

#endif
