#include "laurent.hpp"

#include "error.hpp"

namespace ramcc {

Laurent Laurent::zero(int p, int prec) {
  Laurent r;
  r.p = p;
  r.prec = prec;
  return r;
}

Laurent Laurent::constant(const RatFun& v, int prec) {
  Laurent r;
  r.p = v.p();
  r.prec = prec;
  if (!v.is_zero() && 0 < prec) r.c.emplace(0, v);
  return r;
}

Laurent Laurent::t_pow(int p, int k, int prec) {
  Laurent r;
  r.p = p;
  r.prec = prec;
  if (k < prec) r.c.emplace(k, RatFun::one(p));
  return r;
}

int Laurent::valuation() const {
  if (c.empty())
    fail(Err::PrecisionExhausted, "series vanishes up to O(t^" + std::to_string(prec) + ")");
  return c.begin()->first;
}

RatFun Laurent::coeff(int k) const {
  auto it = c.find(k);
  if (it != c.end()) return it->second;
  return RatFun::zero(p);
}

void Laurent::set_coeff(int k, const RatFun& v) {
  if (k >= prec) return;
  if (v.is_zero())
    c.erase(k);
  else
    c[k] = v;
}

Laurent Laurent::truncated(int new_prec) const {
  Laurent r;
  r.p = p;
  r.prec = std::min(prec, new_prec);
  for (auto& [e, v] : c) {
    if (e >= r.prec) break;
    r.c.emplace(e, v);
  }
  return r;
}

bool Laurent::same_up_to_prec(const Laurent& o) const {
  int m = std::min(prec, o.prec);
  auto it = c.begin();
  auto jt = o.c.begin();
  while (it != c.end() && it->first < m && jt != o.c.end() && jt->first < m) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
    ++it;
    ++jt;
  }
  bool a_done = (it == c.end() || it->first >= m);
  bool b_done = (jt == o.c.end() || jt->first >= m);
  return a_done && b_done;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.p = a.p ? a.p : b.p;
  r.prec = std::min(a.prec, b.prec);
  for (auto& [e, v] : a.c)
    if (e < r.prec) r.c.emplace(e, v);
  for (auto& [e, v] : b.c) {
    if (e >= r.prec) continue;
    auto it = r.c.find(e);
    if (it == r.c.end())
      r.c.emplace(e, v);
    else {
      it->second = it->second + v;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator-(const Laurent& a) {
  Laurent r = a;
  for (auto& [e, v] : r.c) v = -v;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.p = a.p ? a.p : b.p;
  // pessimistic window: the product is known strictly below this
  long long pa = (long long)a.prec + b.vmin_bound();
  long long pb = (long long)b.prec + a.vmin_bound();
  long long pr = std::min(pa, pb);
  const long long kPrecCap = 1 << 22;
  r.prec = int(std::min(pr, kPrecCap));
  for (auto& [ea, va] : a.c)
    for (auto& [eb, vb] : b.c) {
      long long e = (long long)ea + eb;
      if (e >= r.prec) continue;
      RatFun prod = va * vb;
      if (prod.is_zero()) continue;
      auto it = r.c.find(int(e));
      if (it == r.c.end())
        r.c.emplace(int(e), prod);
      else {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.c.erase(it);
      }
    }
  return r;
}

Laurent laurent_scale(const Laurent& a, const RatFun& s) {
  Laurent r;
  r.p = a.p;
  r.prec = a.prec;
  if (s.is_zero()) return r;
  for (auto& [e, v] : a.c) r.c.emplace(e, v * s);
  return r;
}

Laurent laurent_shift(const Laurent& a, int k) {
  Laurent r;
  r.p = a.p;
  r.prec = a.prec + k;
  for (auto& [e, v] : a.c) r.c.emplace(e + k, v);
  return r;
}

std::string Laurent::str() const {
  std::string s;
  for (auto& [e, v] : c) {
    if (!s.empty()) s += " + ";
    std::string cs = v.is_one() ? "" : "(" + v.str() + ")*";
    if (e == 0)
      s += v.is_one() ? "1" : "(" + v.str() + ")";
    else
      s += cs + "t" + (e == 1 ? "" : "^" + std::to_string(e));
  }
  if (!s.empty()) s += " + ";
  s += "O(t^" + std::to_string(prec) + ")";
  return s;
}

}  // namespace ramcc
