#ifndef RAMCC_EXTENSION_HPP
#define RAMCC_EXTENSION_HPP

#include <memory>
#include <vector>

#include "laurent.hpp"

namespace ramcc {

// The extension L = K[T]/(f) of K = F((t)), F = GF(p)(x), with
// f monic of degree p^n, all coefficients integral, and residue
// f mod m = T^{p^n} + abar0 irreducible (purely inseparable residue
// extension E = F(hbar), hbar^{p^n} = -abar0). Shared immutable context.
struct ExtensionSpec {
  int p = 0;
  int n = 0;
  int deg = 0;          // p^n
  std::vector<Laurent> f;  // degree -> coefficient, size deg+1, monic
  int prec = 0;         // working precision
  RatFun abar0;         // residue of f[0], variable x
  RatFun hbar;          // residue of h, variable u; hbar^{p^n} = -abar0

  // Validates everything checkable: monic, integrality, vanishing middle
  // residues, -abar0 outside F^p, and that hbar generates a degree p^n
  // subextension. precision <= 0 selects the default bound.
  static std::shared_ptr<const ExtensionSpec> make(int p, int n, std::vector<Laurent> coeffs,
                                                   int precision = 0);

  static int default_precision(int p, int n, const std::vector<Laurent>& coeffs);

  // Embeds an element of F into GF(p)(u) via x = u^{p^n}.
  RatFun embed_F(const RatFun& a) const { return subst_var_pow(a, deg, Var::u); }
};

using SpecPtr = std::shared_ptr<const ExtensionSpec>;

// Element of O_L = O_K[h] as a coordinate vector over the basis
// 1, h, ..., h^{p^n - 1}.
struct OrderElt {
  SpecPtr spec;
  std::vector<Laurent> c;

  static OrderElt zero(const SpecPtr& s);
  static OrderElt one(const SpecPtr& s);
  static OrderElt h(const SpecPtr& s);
  static OrderElt from_scalar(const SpecPtr& s, const Laurent& v);

  bool looks_zero() const;
  std::string str() const;
};

OrderElt operator+(const OrderElt& a, const OrderElt& b);
OrderElt operator-(const OrderElt& a, const OrderElt& b);
OrderElt operator-(const OrderElt& a);
OrderElt operator*(const OrderElt& a, const OrderElt& b);
OrderElt order_scale(const OrderElt& a, const Laurent& s);
OrderElt order_shift(const OrderElt& a, int k);  // * t^k
OrderElt order_pow(const OrderElt& a, int e);

// Evaluate a polynomial with O_L coordinates (an element written on the
// h-basis) at another order element; this is how Galois elements compose.
OrderElt order_eval_at(const OrderElt& coords, const OrderElt& at);

// min over coordinates of the coefficient valuation; valid because e = 1
// and the residues of 1, h, ..., h^{p^n-1} are F-linearly independent.
int order_valuation(const OrderElt& a);
// Lower bound that never throws (precision when it looks zero).
int order_vmin_bound(const OrderElt& a);

bool order_same(const OrderElt& a, const OrderElt& b);

// Reduction to E inside GF(p)(u); NotIntegral if valuation < 0.
RatFun residue(const OrderElt& a);

// Inverse of a unit (valuation 0); digit-by-digit lifting.
OrderElt order_inverse(const OrderElt& a);

// Writes z in GF(p)(u) on the basis 1, hbar, ..., hbar^{p^n-1} over F;
// returns false when z lies outside E.
bool express_in_E(const SpecPtr& spec, const RatFun& z, std::vector<RatFun>& coords);

// Lift an element of E into O_L (coordinatewise constant series).
OrderElt lift_residue(const SpecPtr& spec, const RatFun& z);

}  // namespace ramcc

#endif
