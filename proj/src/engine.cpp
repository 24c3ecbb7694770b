#include "engine.hpp"

#include <algorithm>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "abbes_saito.hpp"
#include "input.hpp"
#include "nearby.hpp"

namespace ramcc {

using nlohmann::json;

const char* engine_version() { return "ramcc 1.0.0"; }

namespace {

json cyc_json(const CycInt& v) {
  json a = json::array();
  for (auto& c : v.c) a.push_back(c.str());
  return a;
}

json ratfun_json(const RatFun& r) {
  return json{{"num", r.num.str(std::string(1, char(r.var)))},
              {"den", r.den.str(std::string(1, char(r.var)))}};
}

json tensor_json(const DiffTensor& t) {
  json j = ratfun_json(t.coeff);
  j["power"] = t.power;
  return j;
}

json form_json(const CanonicalForm& f) {
  json factors = json::array();
  for (auto& [poly, e] : f.fac)
    factors.push_back(json{{"poly", poly.str("u")}, {"exp", cyc_json(e)}});
  return json{{"torsion", cyc_json(f.torsion)},
              {"factors", factors},
              {"t", cyc_json(f.e_t)},
              {"dh", cyc_json(f.e_dh)}};
}

std::string elt_name(int i) { return "s" + std::to_string(i); }

struct Context {
  InputDocument doc;
  SpecPtr spec;  // null on the abstract path
  std::optional<RamificationData> data;
  std::map<std::string, int> name_to_elt;

  int resolve(const std::string& name, int line = 0) const {
    auto it = name_to_elt.find(name);
    if (it == name_to_elt.end())
      fail(Err::BadInput, "unknown group element '" + name + "'" +
                              (line ? " at line " + std::to_string(line) : ""));
    return it->second;
  }
};

RatFun mobius_apply_x(const RatFun& r, const MobiusMap& m) {
  int p = r.p();
  RatFun num(Var::x, Poly(p, {m.b, m.a}), Poly::constant(p, 1));
  RatFun den(Var::x, Poly(p, {m.d, m.c}), Poly::constant(p, 1));
  if (den.is_zero()) fail(Err::BadInput, "degenerate Mobius denominator");
  auto apply_poly = [&](const Poly& f) {
    RatFun acc = RatFun::zero(p, Var::x);
    for (int i = f.deg(); i >= 0; --i)
      acc = acc * (num / den) + RatFun::constant(p, f.c[i], Var::x);
    return acc;
  };
  return apply_poly(r.num) / apply_poly(r.den);
}

Context build_context(const InputDocument& doc, const RunOptions& opt) {
  Context ctx;
  ctx.doc = doc;
  check_prime(doc.p);
  int precision = opt.precision ? opt.precision : doc.precision;
  if (doc.has_extension && doc.has_abstract)
    fail(Err::BadInput, "[extension] and [abstract] are mutually exclusive");
  if (doc.has_extension) {
    int deg = int(doc.coeff_literals.size());
    std::vector<Laurent> coeffs;
    for (int i = 0; i < deg; ++i)
      coeffs.push_back(literal_to_laurent(doc.coeff_literals[i], doc.p, i));
    coeffs.push_back(Laurent::constant(RatFun::one(doc.p), 1 << 20));
    ctx.spec = ExtensionSpec::make(doc.p, doc.n, coeffs, precision);
    GaloisGroup g;
    if (!doc.conjugate_literals.empty()) {
      std::vector<OrderElt> roots;
      for (auto& lit : doc.conjugate_literals) {
        HPolyValue v = eval_literal(lit, doc.p, 'k', 0);
        if (int(v.c.size()) > ctx.spec->deg)
          fail(Err::BadInput, "conjugate has h-degree >= p^n");
        OrderElt e = OrderElt::zero(ctx.spec);
        for (size_t i = 0; i < v.c.size(); ++i) {
          e.c[i] = v.c[i].truncated(ctx.spec->prec);
          e.c[i].p = doc.p;
        }
        roots.push_back(e);
      }
      g = verify_conjugates(ctx.spec, roots);
    } else {
      g = find_conjugates(ctx.spec);
    }
    ctx.data = ramification_data(g);
  } else if (doc.has_abstract) {
    std::vector<int> jumps{-1};
    for (int j : doc.abs_jumps) jumps.push_back(j);
    std::vector<RatFun> uvals{RatFun::zero(doc.p, Var::u)};
    for (auto& lit : doc.abs_uvals) uvals.push_back(literal_to_ratfun_u(lit, doc.p, 0));
    int m = int(jumps.size());
    if (int(doc.abs_table.size()) != m)
      fail(Err::BadInput, "abstract table must have p^n rows (including s0)");
    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i) {
      if (int(doc.abs_table[i].size()) != m)
        fail(Err::BadInput, "abstract table row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < m; ++j) {
        const std::string& name = doc.abs_table[i][j];
        if (name.size() < 2 || name[0] != 's')
          fail(Err::BadInput, "table entries must be element names s0, s1, ...");
        table[i][j] = std::stoi(name.substr(1));
        if (table[i][j] < 0 || table[i][j] >= m)
          fail(Err::BadInput, "table entry out of range: " + name);
      }
    }
    HPolyValue a0 = eval_literal(doc.abs_abar0, doc.p, 'k', 0);
    if (a0.c.size() != 1 || a0.c[0].c.size() != 1 || a0.c[0].c.begin()->first != 0)
      fail(Err::BadInput, "abar0 must be a rational function of x");
    ctx.data =
        abstract_ramification_data(doc.p, doc.abs_n, jumps, uvals, table, a0.c[0].c.begin()->second);
  } else {
    fail(Err::BadInput, "document needs an [extension] or [abstract] section");
  }
  for (int i = 0; i < ctx.data->size(); ++i) ctx.name_to_elt[elt_name(i)] = i;
  return ctx;
}

json group_json(const Context& ctx) {
  const RamificationData& d = *ctx.data;
  json elems = json::array();
  for (int i = 0; i < d.size(); ++i) {
    json e{{"name", elt_name(i)}};
    if (i == 0) {
      e["identity"] = true;
    } else {
      e["jump"] = d.jump[i];
      e["u"] = ratfun_json(d.uval[i]);
    }
    elems.push_back(e);
  }
  json table = json::array();
  for (int i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.size(); ++j) row.push_back(elt_name(d.mul[i][j]));
    table.push_back(row);
  }
  json gc = json::array();
  for (int i : d.gc) gc.push_back(elt_name(i));
  return json{{"p", d.p},           {"n", d.n},
              {"order", d.size()},  {"conductor", d.c},
              {"rho", d.rho},       {"s", d.s},
              {"G_c", gc},          {"elements", elems},
              {"fbar_c", upoly_str(d.fbar_c)},
              {"abar0", ratfun_json(d.abar0)},
              {"table", table}};
}

// Representations requested by the document: labelled virtual reps.
std::vector<std::pair<std::string, VirtualRep>> representations(const Context& ctx) {
  const RamificationData& d = *ctx.data;
  std::vector<std::pair<std::string, VirtualRep>> out;
  if (!ctx.doc.terms.empty()) {
    VirtualRep m;
    std::string label;
    for (auto& t : ctx.doc.terms) {
      Character theta;
      theta.q = group_exponent(d);
      if (t.subgroup.empty()) {
        for (int i = 0; i < d.size(); ++i) theta.H.push_back(i);
      } else {
        std::vector<int> hs;
        for (auto& name : t.subgroup) hs.push_back(ctx.resolve(name));
        std::sort(hs.begin(), hs.end());
        theta.H = hs;
      }
      theta.expo.assign(theta.H.size(), 0);
      for (auto& [name, e] : t.theta_expo) {
        int elt = ctx.resolve(name);
        auto it = std::find(theta.H.begin(), theta.H.end(), elt);
        if (it == theta.H.end())
          fail(Err::BadInput, "theta value on an element outside H: " + name);
        theta.expo[it - theta.H.begin()] = ((e % theta.q) + theta.q) % theta.q;
      }
      validate_character(d, theta);
      m.terms.push_back({t.mult, theta});
      if (!label.empty()) label += " + ";
      label += std::to_string(t.mult) + "*ind[" + std::to_string(theta.H.size()) + "]";
    }
    out.push_back({label, m});
    return out;
  }
  bool wild_only = ctx.doc.characters_mode != "all";
  for (auto& chi : all_characters(d)) {
    if (chi.is_trivial()) continue;
    if (wild_only && !is_wild(d, chi)) continue;
    std::string label = "chi(";
    bool first = true;
    for (int i = 1; i < d.size(); ++i) {
      if (!first) label += ",";
      label += elt_name(i) + ":" + std::to_string(chi.value_exp(i));
      first = false;
    }
    label += ")";
    VirtualRep m;
    m.terms.push_back({1, chi});
    out.push_back({label, m});
  }
  if (out.empty()) fail(Err::BadInput, "no characters selected; is the group trivial?");
  return out;
}

void check_descent(const Context& ctx, const CanonicalForm& f, json& diagnostics) {
  const RamificationData& d = *ctx.data;
  for (auto& m : ctx.doc.descent) {
    RatFun moved = mobius_apply_x(d.abar0, m);
    if (!(moved == d.abar0))
      fail(Err::BadInput, "descent generator does not fix abar0; the data does not descend");
    if (!canonical_unit_invariant(f, m.a, m.b, m.c, m.d))
      fail(Err::BadInput, "canonical form is not invariant under the declared descent");
  }
  if (!ctx.doc.descent.empty())
    diagnostics.push_back("descent invariance verified for " +
                          std::to_string(ctx.doc.descent.size()) + " generator(s)");
}

}  // namespace

RunResult run_document(const std::string& text, const RunOptions& opt) {
  RunResult res;
  json out;
  out["command"] = opt.command;
  out["version"] = engine_version();
  out["seed"] = opt.seed;
  out["psi0_exponent"] = opt.psi_exp;
  json diagnostics = json::array();
  std::ostringstream hum;
  try {
    InputDocument doc = parse_input(text);
    out["input_echo"] = doc.echo();
    const std::string& cmd = opt.command;
    if (cmd != "validate" && cmd != "invariants" && cmd != "swan" && cmd != "cc" &&
        cmd != "compare" && cmd != "nearby")
      fail(Err::BadInput, "unknown command '" + cmd + "'");

    if (cmd == "nearby" && !doc.has_triple) fail(Err::BadInput, "nearby needs a [triple] section");

    std::optional<Context> ctx;
    bool needs_field = doc.has_extension || doc.has_abstract;
    bool vertical_needs_cc = false;
    for (auto& v : doc.vertical) vertical_needs_cc |= v.use_rep_cc;
    if (cmd != "nearby" || vertical_needs_cc) {
      if (!needs_field && cmd != "nearby")
        fail(Err::BadInput, "command '" + cmd + "' needs an [extension] or [abstract] section");
      if (needs_field) ctx = build_context(doc, opt);
    }

    if (ctx) {
      out["precision"] = ctx->spec ? ctx->spec->prec : 0;
      out["group"] = group_json(*ctx);
      const RamificationData& d = *ctx->data;
      hum << engine_version() << " | " << cmd << " | p = " << d.p << ", degree = " << d.deg
          << ", c = " << d.c << ", rho = " << d.rho << ", #G^c = " << d.gc.size() << "\n";
      hum << "fbar_c = " << upoly_str(d.fbar_c) << "\n";
    }

    json results = json::array();
    int exit_code = 0;

    if (ctx && (cmd == "validate" || cmd == "invariants")) {
      const RamificationData& d = *ctx->data;
      if (cmd == "invariants") {
        CanonicalForm diff = kato_different(d);
        json r{{"different", form_json(diff)}};
        check_descent(*ctx, diff, diagnostics);
        // oracle cross-check: fbar_c against the additive expansion is part
        // of construction; report the jump profile
        json jumps = json::array();
        for (int i = 1; i < d.size(); ++i) jumps.push_back(d.jump[i]);
        r["jumps"] = jumps;
        results.push_back(r);
        hum << "d(L/K) = " << diff.str() << "\n";
      } else {
        hum << "validation passed\n";
      }
    }

    if (ctx && (cmd == "swan" || cmd == "cc" || cmd == "compare")) {
      const RamificationData& d = *ctx->data;
      for (auto& [label, m] : representations(*ctx)) {
        json r{{"representation", label}};
        if (cmd == "swan") {
          SwanResult sw = swan_diffval(d, m, opt.psi_exp);
          r["swan"] = form_json(sw.form);
          r["dim"] = sw.dim;
          r["inner1"] = sw.inner1.str();
          auto integ = integrality_check(sw.form);
          r["integral"] = integ.ok;
          if (!integ.ok) r["witness"] = integ.witness;
          if (m.terms.size() == 1 && m.terms[0].mult == 1 &&
              int(m.terms[0].theta.H.size()) == d.size() && is_wild(d, m.terms[0].theta)) {
            bool two_path = sw.form == swan_rank1_closed(d, m.terms[0].theta, opt.psi_exp);
            r["matches_closed_form"] = two_path;
            if (!two_path) exit_code = std::max(exit_code, 1);
          }
          check_descent(*ctx, sw.form, diagnostics);
          hum << label << ": sw = " << sw.form.str() << (integ.ok ? " [integral]" : " [NOT integral]")
              << "\n";
          if (!integ.ok) exit_code = std::max(exit_code, 1);
        } else if (cmd == "cc") {
          SlopeDecomposition dec = decompose(d, m, opt.psi_exp);
          json slots = json::array();
          for (auto& slot : dec.slots) {
            RefinedSwan rs = rsw_for_character(d, slot.witness, opt.psi_exp);
            slots.push_back(json{{"slope", slot.slope},
                                 {"mult", slot.mult},
                                 {"rsw", ratfun_json(rs.coeff)},
                                 {"twist", rs.twist}});
          }
          DiffTensor t = cc(d, m, opt.psi_exp);
          r["slots"] = slots;
          r["slope0_dim"] = dec.slope0;
          r["cc"] = tensor_json(t);
          bool ha = hasse_arf_check(d, t);
          r["hasse_arf"] = ha;
          if (!ha) exit_code = std::max(exit_code, 1);
          hum << label << ": cc = " << t.str() << (ha ? " [in F]" : " [NOT in F]") << "\n";
        } else {
          CompareReport rep = compare_cc_kcc(d, m, opt.psi_exp);
          r["cc"] = tensor_json(rep.cc_tensor);
          r["kcc"] = tensor_json(rep.kcc_tensor);
          r["conductor_part"] = rep.conductor_part;
          r["equal"] = rep.equal;
          if (!rep.equal) exit_code = std::max(exit_code, 1);
          hum << label << ": cc " << (rep.equal ? "=" : "!=") << " kcc = " << rep.cc_tensor.str()
              << "\n";
        }
        results.push_back(r);
      }
    }

    if (cmd == "nearby") {
      TripleDescription t;
      t.delta = doc.delta;
      t.rank = doc.rank;
      t.psi0 = doc.psi0;
      t.horizontal = doc.horizontal;
      int contraction = 1;
      std::optional<DiffTensor> rep_cc;
      if (vertical_needs_cc) {
        if (!ctx) fail(Err::BadInput, "vertical cc=rep needs an [extension] or [abstract] section");
        auto reps = representations(*ctx);
        if (reps.size() != 1)
          fail(Err::BadInput, "vertical cc=rep needs a single explicit representation");
        rep_cc = cc(*ctx->data, reps[0].second, opt.psi_exp);
        contraction = ctx->data->top_deg;
        // psi0-independence of ord(cc): recompute with psi0' = psi0^2
        if (ctx->data->p > 2) {
          DiffTensor t2 = cc(*ctx->data, reps[0].second, 2 * opt.psi_exp);
          if (ord_of_tensor(*rep_cc, contraction) != ord_of_tensor(t2, contraction))
            fail(Err::Internal, "ord(cc) depends on psi0");
        }
      }
      for (auto& v : doc.vertical) {
        VerticalPointData vp;
        vp.sw_bar = v.sw_bar;
        vp.rank_bar = v.rank_bar;
        vp.deligne = v.deligne;
        if (v.use_rep_cc) vp.cc = rep_cc;
        t.vertical.push_back(vp);
      }
      NearbyReport rep = euler_nearby(t, contraction);
      json r{{"phi_s", rep.phi_s},
             {"phi_eta", rep.phi_eta},
             {"psi0", rep.psi0},
             {"psi1", rep.psi1},
             {"delta", t.delta},
             {"rank", t.rank}};
      results.push_back(r);
      hum << "phi_s = " << rep.phi_s << ", phi_eta = " << rep.phi_eta << ", psi0 = " << rep.psi0
          << ", psi1 = " << rep.psi1 << "\n";
    }

    out["results"] = results;
    out["diagnostics"] = diagnostics;
    res.exit_code = exit_code;
  } catch (const Error& e) {
    out["error"] = e.what();
    out["results"] = json::array();
    out["diagnostics"] = diagnostics;
    res.exit_code = 2;
    hum << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    out["error"] = std::string("internal: ") + e.what();
    res.exit_code = 2;
    hum << "internal error: " << e.what() << "\n";
  }
  res.json = out.dump(2) + "\n";
  res.text = hum.str();
  return res;
}

}  // namespace ramcc
