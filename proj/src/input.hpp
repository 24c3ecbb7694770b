#ifndef RAMCC_INPUT_HPP
#define RAMCC_INPUT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois.hpp"
#include "nearby.hpp"

namespace ramcc {

// Parsed input document. The format is line-oriented with named sections:
//
//   [field]
//   p = 3
//   precision = 64              # optional
//   descent = (x+1)/1           # optional Mobius generators, comma list
//
//   [extension]                 # concrete path
//   n = 1
//   a0 = -x                     # Laurent literals; a_{p^n} = 1 is implied
//   a1 = -t^2
//   conjugates = h, h + t, h + 2*t      # optional
//
//   [abstract]                  # alternative entry path
//   n = 1
//   abar0 = -x
//   jumps = 1, 1
//   uvals = 2, 1                # expressions in u
//   table = s0 s1 s2 / s1 s2 s0 / s2 s0 s1
//
//   [representation]
//   characters = wild           # all | wild (batch mode), or explicit:
//   term = 1 * ind(H = {s0, s1}; theta = s1:1)
//   character = s1:1, s2:2
//
//   [triple]
//   delta = 0
//   rank = 1
//   psi0 = 1
//   horizontal = deg=1 swan=0 rank=1
//   vertical = swbar=0 rankbar=1
//   vertical = cc=rep swbar=0 rankbar=0
//   vertical = deligne=3
struct MobiusMap {
  int a = 1, b = 0, c = 0, d = 1;  // x -> (a x + b)/(c x + d)
};

struct RepTermSpec {
  int mult = 1;
  std::vector<std::string> subgroup;      // element names; empty = whole group
  std::map<std::string, int> theta_expo;  // name -> exponent
};

struct VerticalSpec {
  bool use_rep_cc = false;
  std::optional<int> deligne;
  int sw_bar = 0, rank_bar = 0;
};

struct InputDocument {
  int p = 0;
  int precision = 0;  // 0 = default bound
  std::vector<MobiusMap> descent;

  bool has_extension = false;
  int n = 0;
  std::vector<std::string> coeff_literals;  // a_0 .. a_{p^n - 1}
  std::vector<std::string> conjugate_literals;

  bool has_abstract = false;
  int abs_n = 0;
  std::string abs_abar0;
  std::vector<int> abs_jumps;
  std::vector<std::string> abs_uvals;
  std::vector<std::vector<std::string>> abs_table;

  std::string characters_mode;  // "", "all", "wild"
  std::vector<RepTermSpec> terms;

  bool has_triple = false;
  int delta = 0, rank = 0, psi0 = 0;
  std::vector<HorizontalPointData> horizontal;
  std::vector<VerticalSpec> vertical;

  std::string echo() const;  // canonical re-print (round-trip stable)
};

InputDocument parse_input(const std::string& text);

// Laurent literal evaluation: a polynomial in h with Laurent coefficients.
struct HPolyValue {
  int p = 0;
  std::vector<Laurent> c;  // index = h-power; empty means zero
};

// mode 'k': variables x, t, h; mode 'u': variable u only (constant result).
HPolyValue eval_literal(const std::string& text, int p, char mode, int line_no);

Laurent literal_to_laurent(const std::string& text, int p, int line_no);
RatFun literal_to_ratfun_u(const std::string& text, int p, int line_no);

}  // namespace ramcc

#endif
