#include "characters.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>

#include "error.hpp"

namespace ramcc {

int Character::value_exp(int elt) const {
  auto it = std::find(H.begin(), H.end(), elt);
  if (it == H.end()) fail(Err::BadInput, "character evaluated outside its subgroup");
  return expo[it - H.begin()];
}

bool Character::is_trivial() const {
  for (int e : expo)
    if (e % q != 0) return false;
  return true;
}

int element_order(const RamificationData& d, int elt) {
  int k = 1, cur = elt;
  while (cur != 0) {
    cur = d.mul[cur][elt];
    ++k;
    if (k > d.size()) fail(Err::Internal, "element order exceeds group order");
  }
  return k;
}

int group_exponent(const RamificationData& d) {
  int e = 1;
  for (int i = 0; i < d.size(); ++i) e = std::lcm(e, element_order(d, i));
  return e;
}

AbelianBasis abelian_basis(const RamificationData& d) {
  int m = d.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (d.mul[i][j] != d.mul[j][i])
        fail(Err::NotSupported, "character decomposition requires an abelian Galois group");
  AbelianBasis b;
  // cyclic case
  int best = 0, bestord = 1;
  for (int i = 0; i < m; ++i) {
    int o = element_order(d, i);
    if (o > bestord) {
      bestord = o;
      best = i;
    }
  }
  if (bestord == m) {
    b.gens = {best};
    b.orders = {m};
    b.coords.assign(m, {0});
    int cur = 0, k = 0;
    do {
      b.coords[cur] = {k};
      cur = d.mul[cur][best];
      ++k;
    } while (cur != 0);
    return b;
  }
  if (bestord != d.p)
    fail(Err::NotSupported,
         "abelian groups beyond cyclic or elementary abelian are not supported");
  // elementary abelian: greedy independent generators
  std::map<int, std::vector<int>> span;  // element -> coordinates
  span[0] = {};
  for (int i = 1; i < m; ++i) {
    if (span.count(i)) continue;
    b.gens.push_back(i);
    b.orders.push_back(d.p);
    std::map<int, std::vector<int>> next;
    for (auto& [e, co] : span) {
      int acc = e;
      for (int k = 0; k < d.p; ++k) {
        std::vector<int> c2 = co;
        c2.push_back(k);
        if (!next.emplace(acc, c2).second && k > 0)
          fail(Err::Internal, "elementary abelian span collision");
        acc = d.mul[acc][i];
      }
    }
    span = std::move(next);
  }
  if (int(span.size()) != m) fail(Err::Internal, "abelian basis does not span");
  int r = int(b.gens.size());
  b.coords.assign(m, {});
  for (auto& [e, co] : span) {
    std::vector<int> c = co;
    c.resize(r, 0);
    b.coords[e] = c;
  }
  return b;
}

std::vector<Character> all_characters(const RamificationData& d) {
  AbelianBasis b = abelian_basis(d);
  int q = group_exponent(d);
  int r = int(b.gens.size());
  std::vector<int> H;
  for (int i = 0; i < d.size(); ++i) H.push_back(i);
  std::vector<Character> out;
  std::vector<int> e(r, 0);
  for (;;) {
    Character chi;
    chi.q = q;
    chi.H = H;
    chi.expo.assign(d.size(), 0);
    for (int elt = 0; elt < d.size(); ++elt) {
      long long s = 0;
      for (int i = 0; i < r; ++i) s += (long long)e[i] * b.coords[elt][i] * (q / b.orders[i]);
      chi.expo[elt] = int(s % q);
    }
    out.push_back(chi);
    int i = 0;
    for (; i < r; ++i) {
      if (++e[i] < b.orders[i]) break;
      e[i] = 0;
    }
    if (i == r) break;
  }
  return out;
}

std::vector<Character> subgroup_characters(const RamificationData& d, const std::vector<int>& H) {
  std::vector<int> Hs = H;
  std::sort(Hs.begin(), Hs.end());
  std::set<std::vector<int>> seen;
  std::vector<Character> out;
  for (auto& chi : all_characters(d)) {
    Character r;
    r.q = chi.q;
    r.H = Hs;
    for (int h : Hs) r.expo.push_back(chi.value_exp(h));
    if (seen.insert(r.expo).second) out.push_back(r);
  }
  return out;
}

std::vector<Character> extensions_to_G(const RamificationData& d, const Character& theta) {
  std::vector<Character> out;
  for (auto& chi : all_characters(d)) {
    bool match = true;
    for (size_t i = 0; i < theta.H.size() && match; ++i) {
      // equality of roots of unity: e_chi / q_chi = e_theta / q_theta mod 1
      long long mod = (long long)chi.q * theta.q;
      long long lhs = (long long)chi.value_exp(theta.H[i]) * theta.q % mod;
      long long rhs = (long long)theta.expo[i] * chi.q % mod;
      if (lhs != rhs) match = false;
    }
    if (match) out.push_back(chi);
  }
  return out;
}

void validate_character(const RamificationData& d, const Character& chi) {
  std::set<int> hs(chi.H.begin(), chi.H.end());
  if (!hs.count(0)) fail(Err::BadInput, "character subgroup must contain the identity");
  if (chi.H.size() != chi.expo.size()) fail(Err::BadInput, "character value list size mismatch");
  for (int a : chi.H)
    for (int b : chi.H) {
      int ab = d.mul[a][b];
      if (!hs.count(ab)) fail(Err::BadInput, "character subgroup is not closed");
      long long want = (chi.value_exp(a) + (long long)chi.value_exp(b)) % chi.q;
      if (chi.value_exp(ab) % chi.q != want)
        fail(Err::BadInput, "character values are not multiplicative");
    }
  if (chi.value_exp(0) % chi.q != 0) fail(Err::BadInput, "character must send 1 to 1");
}

std::vector<int> character_kernel(const RamificationData& d, const Character& chi) {
  std::vector<int> ker;
  for (int i : chi.H)
    if (chi.value_exp(i) % chi.q == 0) ker.push_back(i);
  (void)d;
  return ker;
}

bool is_wild(const RamificationData& d, const Character& chi) {
  for (int i : d.gc)
    if (chi.value_exp(i) % chi.q != 0) return true;
  return false;
}

CycInt rep_trace(const RamificationData& d, const VirtualRep& m, int elt, int q) {
  if (q == 0) q = group_exponent(d);
  CycInt tr(q);
  for (auto& term : m.terms) {
    std::set<int> hs(term.theta.H.begin(), term.theta.H.end());
    // left coset representatives of H in G
    std::vector<char> covered(d.size(), 0);
    for (int g = 0; g < d.size(); ++g) {
      if (covered[g]) continue;
      for (int h : term.theta.H) covered[d.mul[g][h]] = 1;
      int conj = d.mul[d.mul[d.inv[g]][elt]][g];  // g^{-1} elt g
      if (hs.count(conj)) {
        long long e = (long long)term.theta.value_exp(conj) * (q / term.theta.q);
        CycInt v = CycInt::zeta_pow(q, e);
        tr = tr + cyc_scale(v, term.mult);
      }
    }
  }
  return tr;
}

int rep_dim(const RamificationData& d, const VirtualRep& m) {
  int dim = 0;
  for (auto& term : m.terms) dim += term.mult * (d.size() / int(term.theta.H.size()));
  return dim;
}

BigInt rep_inner_one(const RamificationData& d, const VirtualRep& m) {
  CycInt sum(group_exponent(d));
  for (int i = 0; i < d.size(); ++i) sum = sum + rep_trace(d, m, i);
  CycInt avg = cyc_div_exact(sum, d.size());
  if (!avg.is_rational())
    fail(Err::NonIntegralInnerProduct, "<chi, 1> is not a rational integer");
  // Frobenius route: sum of mults of trivial inducing characters
  BigInt frob = 0;
  for (auto& term : m.terms)
    if (term.theta.is_trivial()) frob += term.mult;
  if (avg.rational() != frob)
    fail(Err::Internal, "inner product disagrees with the Frobenius formula");
  return avg.rational();
}

int chibar_on(const RamificationData& d, const Character& chi, int elt, int psi_exp) {
  int q = chi.q;
  int p = d.p;
  int e = chi.value_exp(elt) % q;
  // elements of G^c are killed by p, so e must be a multiple of q/p
  if ((long long)e * p % q != 0)
    fail(Err::Internal, "character value on G^c is not a p-th root of unity");
  int ep = int(((long long)e * p / q) % p);  // value = zeta_p^{ep}
  return fp_mul(ep, fp_inv(fp_norm(psi_exp, p), p), p);
}

int tau_lift(const RamificationData& d, const Character& chi, int psi_exp) {
  for (int i : d.gc)
    if (chibar_on(d, chi, i, psi_exp) == 1) return i;
  fail(Err::CharacterNotWild, "character is trivial on G^c");
}

}  // namespace ramcc
