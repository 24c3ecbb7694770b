#include "nearby.hpp"

#include "error.hpp"

namespace ramcc {

int dimtot_horizontal(const HorizontalPointData& d) {
  if (d.degree < 1 || d.swan < 0 || d.rank < 0)
    fail(Err::BadInput, "horizontal point data must be non-negative with degree >= 1");
  return d.degree * (d.swan + d.rank);
}

int ord_of_tensor(const DiffTensor& t, int u_contraction) {
  if (t.power == 0) return 0;  // empty tensor convention
  if (t.is_zero()) fail(Err::ZeroTensor, "ord of the zero tensor");
  int o = ratfun_ord0(t.coeff);
  if (t.coeff.var == Var::u) {
    if (o % u_contraction != 0)
      fail(Err::Internal, "u-order not divisible by p^n; coefficient outside F");
    o /= u_contraction;
  }
  return o;
}

int dimtot_vertical(const VerticalPointData& d, int u_contraction) {
  if (d.deligne) {
    if (*d.deligne < 0) fail(Err::BadInput, "Deligne-case total dimension must be >= 0");
    return *d.deligne;
  }
  if (d.sw_bar < 0 || d.rank_bar < 0) fail(Err::BadInput, "tame data must be non-negative");
  int o = 0;
  if (d.cc) o = ord_of_tensor(*d.cc, u_contraction);
  return -o + d.sw_bar + d.rank_bar;
}

NearbyReport euler_nearby(const TripleDescription& t, int u_contraction) {
  if (t.delta < 0 || t.rank < 0 || t.psi0 < 0)
    fail(Err::BadInput, "delta, rank and dim Psi^0 must be non-negative");
  NearbyReport r;
  r.psi0 = t.psi0;
  for (auto& h : t.horizontal) r.phi_eta += dimtot_horizontal(h);
  for (auto& v : t.vertical) r.phi_s += dimtot_vertical(v, u_contraction);
  // dim Psi^0 - dim Psi^1 = phi_s - phi_eta - 2 delta rank
  r.psi1 = r.psi0 - r.phi_s + r.phi_eta + 2LL * t.delta * t.rank;
  if (r.psi1 < 0)
    fail(Err::NegativeDimension,
         "dim Psi^1 = " + std::to_string(r.psi1) + " < 0 (phi_s = " + std::to_string(r.phi_s) +
             ", phi_eta = " + std::to_string(r.phi_eta) + ", psi0 = " + std::to_string(r.psi0) +
             ", delta = " + std::to_string(t.delta) + ", rank = " + std::to_string(t.rank) +
             "); inconsistent input");
  return r;
}

}  // namespace ramcc
