#ifndef RAMCC_CHARACTERS_HPP
#define RAMCC_CHARACTERS_HPP

#include <vector>

#include "cyclotomic.hpp"
#include "galois.hpp"

namespace ramcc {

// A 1-dimensional character of a subgroup H of G with values in mu_q,
// stored as exponents: value(sigma) = zeta_q^{expo[position of sigma in H]}.
struct Character {
  int q = 2;
  std::vector<int> H;     // sorted element indices, a subgroup
  std::vector<int> expo;  // aligned with H

  int value_exp(int elt) const;  // exponent for an element of H
  bool is_trivial() const;
  CycInt value(int elt) const { return CycInt::zeta_pow(q, value_exp(elt)); }
};

// Z-combination of monomial terms ind_H^G theta. Spec invariant: every
// inducing subgroup contains G^c.
struct VirtualRep {
  struct Term {
    int mult;
    Character theta;
  };
  std::vector<Term> terms;
};

// exponent of the group: smallest q with sigma^q = 1 for all sigma
int group_exponent(const RamificationData& d);

// order of one element
int element_order(const RamificationData& d, int elt);

// Decomposition of an abelian group into cyclic generators; NotSupported
// for groups that are neither cyclic nor elementary abelian (the corpus
// never produces those).
struct AbelianBasis {
  std::vector<int> gens;
  std::vector<int> orders;
  std::vector<std::vector<int>> coords;  // element -> exponent tuple
};
AbelianBasis abelian_basis(const RamificationData& d);

// All 1-dimensional characters of G (abelian), values in mu_{exponent}.
std::vector<Character> all_characters(const RamificationData& d);

// All characters of the subgroup H (abelian ambient group).
std::vector<Character> subgroup_characters(const RamificationData& d, const std::vector<int>& H);

// The [G:H] characters of G restricting to theta on H.
std::vector<Character> extensions_to_G(const RamificationData& d, const Character& theta);

// Character theory of a virtual representation. q is the cyclotomic order
// of the values (a multiple of the group exponent); 0 picks the exponent.
CycInt rep_trace(const RamificationData& d, const VirtualRep& m, int elt, int q = 0);
int rep_dim(const RamificationData& d, const VirtualRep& m);
// <M, 1> = (1/#G) sum tr; asserted to be a rational integer.
BigInt rep_inner_one(const RamificationData& d, const VirtualRep& m);

// Character value homomorphism check; BadInput on violation.
void validate_character(const RamificationData& d, const Character& chi);

// ker(chi) as element indices (chi a character of all of G).
std::vector<int> character_kernel(const RamificationData& d, const Character& chi);

// chi restricted to G^c is nontrivial?
bool is_wild(const RamificationData& d, const Character& chi);

// The F_p-reduction of chi on G^c via psi0^k: chi(sigma) = psi0(chibar)^...,
// i.e. chibar(sigma) = e/k' where value = zeta_p^e. Requires chi|_{G^c} to
// take values in mu_p. psi0 sends 1 to zeta_q^{(q/p)*psi_exp}.
int chibar_on(const RamificationData& d, const Character& chi, int elt, int psi_exp);

// Some lift tau in G^c with chibar(tau) = 1; CharacterNotWild when chi is
// trivial on G^c.
int tau_lift(const RamificationData& d, const Character& chi, int psi_exp);

}  // namespace ramcc

#endif
