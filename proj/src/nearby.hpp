#ifndef RAMCC_NEARBY_HPP
#define RAMCC_NEARBY_HPP

#include <optional>
#include <vector>

#include "ratfun.hpp"

namespace ramcc {

struct HorizontalPointData {
  int degree = 1;  // [kappa(p) : kappa(eta)]
  int swan = 0;
  int rank = 0;
};

// A vertical (special-fiber) point: either the computed route through a
// characteristic cycle plus the tame data of the direct image, or the
// Deligne-case total dimension supplied directly.
struct VerticalPointData {
  std::optional<DiffTensor> cc;  // coefficient in x or embedded in u
  int sw_bar = 0;                // Swan conductor of the direct image
  int rank_bar = 0;
  std::optional<int> deligne;    // case (b): sw + rank, pass-through
};

struct TripleDescription {
  int delta = 0;  // delta(H)
  int rank = 0;   // rank(F)
  int psi0 = 0;   // dim Psi^0 (an input; see the CLI documentation)
  std::vector<HorizontalPointData> horizontal;
  std::vector<VerticalPointData> vertical;
};

struct NearbyReport {
  long long phi_s = 0;
  long long phi_eta = 0;
  long long psi0 = 0;
  long long psi1 = 0;
};

int dimtot_horizontal(const HorizontalPointData& d);

// Order of vanishing at x = 0 of a tensor: ord(alpha (dx)^m) = ord(alpha),
// the basis contributing 0 since ord(x) = 1. For coefficients presented
// over u with u^{p^n} = x, the u-order is divided by p^n.
int ord_of_tensor(const DiffTensor& t, int u_contraction = 1);

int dimtot_vertical(const VerticalPointData& d, int u_contraction = 1);

NearbyReport euler_nearby(const TripleDescription& t, int u_contraction = 1);

}  // namespace ramcc

#endif
