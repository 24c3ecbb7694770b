#ifndef RAMCC_GALOIS_HPP
#define RAMCC_GALOIS_HPP

#include <optional>
#include <vector>

#include "extension.hpp"

namespace ramcc {

// Dense polynomial over GF(p)(u); c[i] multiplies T^i.
using UPoly = std::vector<RatFun>;

void upoly_trim(UPoly& f);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
RatFun upoly_eval(const UPoly& f, const RatFun& z);
std::string upoly_str(const UPoly& f);
bool upoly_equal(const UPoly& a, const UPoly& b);

// Expand prod over (j_1,...,j_r) in F_p^r of (T + sum j_i x_i) by brute
// force; asserts that only T^{p^k} powers survive and that the linear
// coefficient is the product over nonzero tuples. SpanConditionViolated
// when some nontrivial combination vanishes.
UPoly additive_poly_oracle(int p, const std::vector<RatFun>& points);

struct GaloisElement {
  OrderElt image;  // sigma(h)
  int jump;        // v(h - sigma(h)); -1 for the identity (infinite)
};

struct GaloisGroup {
  SpecPtr spec;
  std::vector<GaloisElement> elts;        // identity first, then (jump, u-value) order
  std::vector<std::vector<int>> mul;      // mul[i][j]: sigma_i then sigma_j... see note
  std::vector<int> inv;

  int size() const { return int(elts.size()); }
};

// All p^n roots of f in O_L by Newton-polygon lifting; doubles the working
// precision and retries once on PrecisionExhausted.
GaloisGroup find_conjugates(const SpecPtr& spec);

// Checks the supplied roots (first must be h), builds the multiplication
// table. Errors: NotARoot, NotClosed, PrecisionExhausted.
GaloisGroup verify_conjugates(const SpecPtr& spec, std::vector<OrderElt> roots);

// The section-5 invariants of an extension, shared by the concrete and the
// abstract input paths. Quotient data keeps u-values in the coordinates of
// the top field; [d hbar'] = [dh_unit] + dh_weight * [d hbar_top].
struct RamificationData {
  int p = 0, n = 0, deg = 0;  // this level's degree over K
  int c = 0, rho = 0, s = 0;  // conductor, max jump, #G^c = p^s
  std::vector<int> jump;      // per element; -1 for identity
  std::vector<RatFun> uval;   // var u; 0 for identity
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<char> in_gc;
  std::vector<int> gc;        // indices of G^c members (identity included)
  UPoly fbar_c;
  RatFun abar0;               // var x: residue of the constant coefficient
  RatFun hbar;                // var u
  RatFun dh_unit;             // var u constant; 1 at top level
  int dh_weight = 1;          // #H for a quotient by H; 1 at top level
  int top_deg = 0;            // degree of the ambient coordinate field; = deg at top

  // for quotient data: projection from the parent's element indices
  std::vector<int> parent_proj;

  int size() const { return int(jump.size()); }
  bool is_identity(int i) const { return jump[i] < 0; }
};

// Jump profile, conductor, G^c, u-map and fbar_c from a verified group.
// AdditivityViolation when the wild part of fbar_c is not additive.
RamificationData ramification_data(const GaloisGroup& g);

// Same invariants from abstract data (mixed-characteristic entry path):
// trusts the supplied jumps, checks everything else it can.
RamificationData abstract_ramification_data(int p, int n, const std::vector<int>& jumps,
                                            const std::vector<RatFun>& uvals,
                                            const std::vector<std::vector<int>>& table,
                                            const RatFun& abar0);

// The quotient extension by a kernel subgroup, in top coordinates:
// J(tau) = sum of jumps over the coset, u'_tau = prod of u-values.
RamificationData quotient_data(const RamificationData& d, const std::vector<int>& kernel);

// Conductor of the quotient by `kernel` straight from the jump profile.
int quotient_conductor(const RamificationData& d, const std::vector<int>& kernel);

// Ramification data of L over the fixed field L^H: the subgroup H with its
// own jumps and u-values. Same generator h, so symbols keep coordinates.
// parent_proj maps parent indices (identity for members of H, -1 outside).
RamificationData subgroup_data(const RamificationData& d, const std::vector<int>& H);

// Subgroup generated by the given element indices.
std::vector<int> subgroup_closure(const RamificationData& d, std::vector<int> gens);

}  // namespace ramcc

#endif
