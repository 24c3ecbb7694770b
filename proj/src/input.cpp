#include "input.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

#include "error.hpp"

namespace ramcc {

namespace {

constexpr int kExactPrec = 1 << 20;

[[noreturn]] void parse_fail(int line, int col, const std::string& expected) {
  fail(Err::ParseError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                            expected);
}

// ---- expression evaluator for Laurent/conjugate/u literals -------------

struct Token {
  enum Kind { Int, Sym, Op, End } kind;
  long long ival = 0;
  char ch = 0;  // symbol name or operator
  int col = 0;
};

std::vector<Token> lex(const std::string& s, int line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = int(i) + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > (1LL << 40)) parse_fail(line, col, "integer literal too large");
        ++j;
      }
      out.push_back({Token::Int, v, 0, col});
      i = j;
      continue;
    }
    if (c == 'x' || c == 't' || c == 'h' || c == 'u' || c == 'O') {
      out.push_back({Token::Sym, 0, c, col});
      ++i;
      continue;
    }
    if (std::strchr("+-*/^()", c)) {
      out.push_back({Token::Op, 0, c, col});
      ++i;
      continue;
    }
    parse_fail(line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, 0, 0, int(s.size()) + 1});
  return out;
}

struct Evaluator {
  int p;
  char mode;  // 'k' (x, t, h) or 'u'
  int line;
  const std::vector<Token>* toks;
  size_t pos = 0;

  const Token& peek() const { return (*toks)[pos]; }
  Token take() { return (*toks)[pos++]; }
  void expect_op(char c) {
    if (peek().kind != Token::Op || peek().ch != c)
      parse_fail(line, peek().col, std::string("expected '") + c + "'");
    ++pos;
  }

  HPolyValue make_zero() const { return {p, {}}; }
  HPolyValue make_const(const RatFun& r) const {
    HPolyValue v{p, {}};
    if (!r.is_zero()) v.c.push_back(Laurent::constant(r, kExactPrec));
    return v;
  }

  static void trim(HPolyValue& v) {
    while (!v.c.empty() && v.c.back().looks_zero() && v.c.back().prec >= kExactPrec)
      v.c.pop_back();
  }

  HPolyValue add(HPolyValue a, const HPolyValue& b, int sign) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Laurent::zero(p, kExactPrec));
    for (size_t i = 0; i < b.c.size(); ++i)
      a.c[i] = sign > 0 ? a.c[i] + b.c[i] : a.c[i] - b.c[i];
    trim(a);
    return a;
  }

  HPolyValue mul(const HPolyValue& a, const HPolyValue& b) {
    if (a.c.empty() || b.c.empty()) {
      // preserve precision caps from O() terms
      HPolyValue r{p, {}};
      int prec = kExactPrec;
      for (auto& v : a.c) prec = std::min(prec, v.prec);
      for (auto& v : b.c) prec = std::min(prec, v.prec);
      if (a.c.empty() && b.c.empty()) return r;
      r.c.push_back(Laurent::zero(p, prec));
      return r;
    }
    HPolyValue r{p, std::vector<Laurent>(a.c.size() + b.c.size() - 1, Laurent::zero(p, kExactPrec))};
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    trim(r);
    return r;
  }

  HPolyValue divide(const HPolyValue& a, const HPolyValue& b, int col) {
    // denominator must be h-free with a single stored t-coefficient
    if (b.c.size() != 1 || b.c[0].c.size() != 1)
      parse_fail(line, col, "division only by a single coefficient * t^k term");
    auto [e, coeff] = *b.c[0].c.begin();
    HPolyValue r = a;
    RatFun inv = ratfun_inv(coeff);
    for (auto& v : r.c) v = laurent_shift(laurent_scale(v, inv), -e);
    return r;
  }

  HPolyValue pow(HPolyValue base, long long e, int col) {
    if (e < 0) parse_fail(line, col, "negative exponents only on t (write t^-k)");
    HPolyValue r = make_const(RatFun::one(p, mode == 'u' ? Var::u : Var::x));
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  long long parse_signed_int() {
    int sign = 1;
    if (peek().kind == Token::Op && (peek().ch == '-' || peek().ch == '+')) {
      if (take().ch == '-') sign = -1;
    }
    if (peek().kind != Token::Int) parse_fail(line, peek().col, "expected an integer exponent");
    return sign * take().ival;
  }

  HPolyValue atom() {
    const Token& tk = peek();
    if (tk.kind == Token::Int) {
      take();
      return make_const(RatFun::constant(p, int(tk.ival % p), mode == 'u' ? Var::u : Var::x));
    }
    if (tk.kind == Token::Op && tk.ch == '(') {
      take();
      HPolyValue v = expr();
      expect_op(')');
      return v;
    }
    if (tk.kind == Token::Sym) {
      char c = take().ch;
      if (mode == 'u') {
        if (c != 'u') parse_fail(line, tk.col, "only the variable u is allowed here");
        return make_const(RatFun::variable(p, Var::u));
      }
      if (c == 'x') return make_const(RatFun::variable(p, Var::x));
      if (c == 't') {
        HPolyValue v{p, {Laurent::t_pow(p, 1, kExactPrec)}};
        return v;
      }
      if (c == 'h') {
        HPolyValue v{p, std::vector<Laurent>(2, Laurent::zero(p, kExactPrec))};
        v.c[1] = Laurent::constant(RatFun::one(p), kExactPrec);
        return v;
      }
      if (c == 'O') {
        // O(t^k): a zero value carrying precision k
        expect_op('(');
        if (peek().kind != Token::Sym || peek().ch != 't')
          parse_fail(line, peek().col, "O(...) takes a power of t");
        take();
        long long k = 1;
        if (peek().kind == Token::Op && peek().ch == '^') {
          take();
          k = parse_signed_int();
        }
        expect_op(')');
        HPolyValue v{p, {Laurent::zero(p, int(k))}};
        return v;
      }
    }
    parse_fail(line, tk.col, "expected a value");
  }

  HPolyValue factor() {
    // t^k gets special treatment so that negative exponents work
    if (peek().kind == Token::Sym && peek().ch == 't' && mode == 'k') {
      int col = peek().col;
      take();
      long long k = 1;
      if (peek().kind == Token::Op && peek().ch == '^') {
        take();
        k = parse_signed_int();
      }
      (void)col;
      HPolyValue v{p, {Laurent::t_pow(p, int(k), kExactPrec)}};
      return v;
    }
    HPolyValue base = atom();
    if (peek().kind == Token::Op && peek().ch == '^') {
      int col = peek().col;
      take();
      long long e = parse_signed_int();
      if (e < 0) {
        // only valid for a single-term h-free base; reuse divide
        HPolyValue one = make_const(RatFun::one(p, mode == 'u' ? Var::u : Var::x));
        HPolyValue pos = pow(base, -e, col);
        return divide(one, pos, col);
      }
      return pow(base, e, col);
    }
    return base;
  }

  HPolyValue term() {
    HPolyValue v = factor();
    while (peek().kind == Token::Op && (peek().ch == '*' || peek().ch == '/')) {
      char op = take().ch;
      int col = peek().col;
      HPolyValue rhs = factor();
      v = op == '*' ? mul(v, rhs) : divide(v, rhs, col);
    }
    return v;
  }

  HPolyValue expr() {
    int sign = 1;
    if (peek().kind == Token::Op && (peek().ch == '+' || peek().ch == '-')) {
      if (take().ch == '-') sign = -1;
    }
    HPolyValue v = term();
    if (sign < 0) v = add(make_zero(), v, -1);
    while (peek().kind == Token::Op && (peek().ch == '+' || peek().ch == '-')) {
      char op = take().ch;
      HPolyValue rhs = term();
      v = add(v, rhs, op == '+' ? 1 : -1);
    }
    return v;
  }
};

}  // namespace

HPolyValue eval_literal(const std::string& text, int p, char mode, int line_no) {
  auto toks = lex(text, line_no);
  Evaluator ev{p, mode, line_no, &toks, 0};
  HPolyValue v = ev.expr();
  if (ev.peek().kind != Token::End) parse_fail(line_no, ev.peek().col, "trailing input");
  return v;
}

Laurent literal_to_laurent(const std::string& text, int p, int line_no) {
  HPolyValue v = eval_literal(text, p, 'k', line_no);
  if (v.c.size() > 1) parse_fail(line_no, 1, "expected a Laurent series without h");
  if (v.c.empty()) return Laurent::zero(p, kExactPrec);
  return v.c[0];
}

RatFun literal_to_ratfun_u(const std::string& text, int p, int line_no) {
  HPolyValue v = eval_literal(text, p, 'u', line_no);
  if (v.c.empty()) return RatFun::zero(p, Var::u);
  if (v.c.size() > 1 || v.c[0].c.size() > 1 ||
      (v.c[0].c.size() == 1 && v.c[0].c.begin()->first != 0))
    parse_fail(line_no, 1, "expected a rational function of u");
  return v.c[0].c.empty() ? RatFun::zero(p, Var::u) : v.c[0].c.begin()->second;
}

// ---- document parsing ----------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(strip(s), &used);
    if (used != strip(s).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    parse_fail(line, 1, "expected an integer, got '" + strip(s) + "'");
  }
}

MobiusMap parse_mobius(const std::string& s, int line) {
  // forms: a*x+b, (a*x+b)/(c*x+d), x+b, ...
  auto parse_linear = [&](std::string part) {
    part = strip(part);
    if (!part.empty() && part.front() == '(' && part.back() == ')')
      part = strip(part.substr(1, part.size() - 2));
    int a = 0, b = 0;
    // split on '+'/'-' at top level
    std::vector<std::pair<int, std::string>> pieces;
    int sign = 1;
    std::string cur;
    for (char c : part) {
      if (c == '+' || c == '-') {
        if (!strip(cur).empty()) pieces.push_back({sign, strip(cur)});
        sign = (c == '-') ? -1 : 1;
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!strip(cur).empty()) pieces.push_back({sign, strip(cur)});
    for (auto& [sg, pc] : pieces) {
      if (pc.find('x') != std::string::npos) {
        std::string coef = pc.substr(0, pc.find('x'));
        while (!coef.empty() && (coef.back() == '*' || coef.back() == ' ')) coef.pop_back();
        a += sg * (coef.empty() ? 1 : parse_int(coef, line));
      } else {
        b += sg * parse_int(pc, line);
      }
    }
    return std::pair<int, int>{a, b};
  };
  MobiusMap m;
  std::string body = strip(s);
  size_t slash = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == '/' && depth == 0) slash = i;
  }
  if (slash == std::string::npos) {
    auto [a, b] = parse_linear(body);
    m.a = a;
    m.b = b;
    m.c = 0;
    m.d = 1;
  } else {
    auto [a, b] = parse_linear(body.substr(0, slash));
    auto [c, d] = parse_linear(body.substr(slash + 1));
    m = {a, b, c, d};
  }
  if (m.a == 0 && m.b == 0) parse_fail(line, 1, "degenerate Mobius numerator");
  return m;
}

RepTermSpec parse_term(const std::string& s, int line) {
  // <mult> * ind(H = {names}; theta = name:exp, ...)
  RepTermSpec t;
  std::string body = strip(s);
  size_t star = body.find('*');
  size_t ind = body.find("ind");
  if (ind == std::string::npos) parse_fail(line, 1, "term must contain ind(...)");
  if (star != std::string::npos && star < ind) {
    t.mult = parse_int(body.substr(0, star), line);
    body = strip(body.substr(star + 1));
    ind = body.find("ind");
  }
  size_t open = body.find('(', ind);
  size_t close = body.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close <= open)
    parse_fail(line, 1, "malformed ind(...)");
  std::string args = body.substr(open + 1, close - open - 1);
  for (auto& part : split(args, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) parse_fail(line, 1, "expected key = value inside ind(...)");
    std::string key = strip(part.substr(0, eq));
    std::string val = strip(part.substr(eq + 1));
    if (key == "H") {
      if (val.size() < 2 || val.front() != '{' || val.back() != '}')
        parse_fail(line, 1, "H expects {s0, s1, ...}");
      for (auto& name : split(val.substr(1, val.size() - 2), ','))
        if (!name.empty()) t.subgroup.push_back(name);
    } else if (key == "theta") {
      for (auto& pair : split(val, ',')) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) parse_fail(line, 1, "theta expects name:exponent pairs");
        t.theta_expo[strip(pair.substr(0, colon))] = parse_int(pair.substr(colon + 1), line);
      }
    } else {
      parse_fail(line, 1, "unknown key '" + key + "' inside ind(...)");
    }
  }
  return t;
}

std::map<std::string, std::string> parse_kv_list(const std::string& s, int line) {
  std::map<std::string, std::string> kv;
  for (auto& piece : split(s, ' ')) {
    if (piece.empty()) continue;
    auto eq = piece.find('=');
    if (eq == std::string::npos) parse_fail(line, 1, "expected key=value, got '" + piece + "'");
    kv[strip(piece.substr(0, eq))] = strip(piece.substr(eq + 1));
  }
  return kv;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  InputDocument doc;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int ln = 0;
  std::map<int, std::string> coeff_map;
  while (std::getline(in, line)) {
    ++ln;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail(ln, int(s.size()), "unterminated section header");
      section = s.substr(1, s.size() - 2);
      if (section == "extension") doc.has_extension = true;
      if (section == "abstract") doc.has_abstract = true;
      if (section == "triple") doc.has_triple = true;
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) parse_fail(ln, 1, "expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string val = strip(s.substr(eq + 1));
    if (section == "field") {
      if (key == "p")
        doc.p = parse_int(val, ln);
      else if (key == "precision")
        doc.precision = parse_int(val, ln);
      else if (key == "descent")
        for (auto& part : split(val, ','))
          doc.descent.push_back(parse_mobius(part, ln));
      else
        parse_fail(ln, 1, "unknown key '" + key + "' in [field]");
    } else if (section == "extension") {
      if (key == "n")
        doc.n = parse_int(val, ln);
      else if (key.size() >= 2 && key[0] == 'a')
        coeff_map[parse_int(key.substr(1), ln)] = val;
      else if (key == "conjugates")
        doc.conjugate_literals = split(val, ',');
      else
        parse_fail(ln, 1, "unknown key '" + key + "' in [extension]");
    } else if (section == "abstract") {
      if (key == "n")
        doc.abs_n = parse_int(val, ln);
      else if (key == "abar0")
        doc.abs_abar0 = val;
      else if (key == "jumps")
        for (auto& part : split(val, ',')) doc.abs_jumps.push_back(parse_int(part, ln));
      else if (key == "uvals")
        doc.abs_uvals = split(val, ',');
      else if (key == "table")
        for (auto& row : split(val, '/')) {
          std::vector<std::string> names;
          for (auto& name : split(row, ' '))
            if (!name.empty()) names.push_back(name);
          doc.abs_table.push_back(names);
        }
      else
        parse_fail(ln, 1, "unknown key '" + key + "' in [abstract]");
    } else if (section == "representation") {
      if (key == "characters") {
        if (val != "all" && val != "wild")
          parse_fail(ln, 1, "characters must be 'all' or 'wild'");
        doc.characters_mode = val;
      } else if (key == "term") {
        doc.terms.push_back(parse_term(val, ln));
      } else if (key == "character") {
        RepTermSpec t;  // a character of the whole group: ind from H = G
        for (auto& pair : split(val, ',')) {
          auto colon = pair.find(':');
          if (colon == std::string::npos)
            parse_fail(ln, 1, "character expects name:exponent pairs");
          t.theta_expo[strip(pair.substr(0, colon))] = parse_int(pair.substr(colon + 1), ln);
        }
        doc.terms.push_back(t);
      } else {
        parse_fail(ln, 1, "unknown key '" + key + "' in [representation]");
      }
    } else if (section == "triple") {
      if (key == "delta")
        doc.delta = parse_int(val, ln);
      else if (key == "rank")
        doc.rank = parse_int(val, ln);
      else if (key == "psi0")
        doc.psi0 = parse_int(val, ln);
      else if (key == "horizontal") {
        auto kv = parse_kv_list(val, ln);
        HorizontalPointData h;
        if (kv.count("deg")) h.degree = parse_int(kv["deg"], ln);
        if (kv.count("swan")) h.swan = parse_int(kv["swan"], ln);
        if (kv.count("rank")) h.rank = parse_int(kv["rank"], ln);
        doc.horizontal.push_back(h);
      } else if (key == "vertical") {
        auto kv = parse_kv_list(val, ln);
        VerticalSpec v;
        if (kv.count("deligne")) v.deligne = parse_int(kv["deligne"], ln);
        if (kv.count("cc")) {
          if (kv["cc"] != "rep") parse_fail(ln, 1, "vertical cc must be 'rep'");
          v.use_rep_cc = true;
        }
        if (kv.count("swbar")) v.sw_bar = parse_int(kv["swbar"], ln);
        if (kv.count("rankbar")) v.rank_bar = parse_int(kv["rankbar"], ln);
        doc.vertical.push_back(v);
      } else {
        parse_fail(ln, 1, "unknown key '" + key + "' in [triple]");
      }
    } else if (section.empty()) {
      parse_fail(ln, 1, "key outside of any [section]");
    } else {
      parse_fail(ln, 1, "unknown section [" + section + "]");
    }
  }
  if (doc.p == 0 && (doc.has_extension || doc.has_abstract))
    fail(Err::ParseError, "missing [field] p = <prime>");
  if (doc.has_extension) {
    if (doc.n < 1) fail(Err::ParseError, "missing n in [extension]");
    int deg = 1;
    for (int i = 0; i < doc.n; ++i) deg *= doc.p;
    doc.coeff_literals.assign(deg, "0");
    for (auto& [i, lit] : coeff_map) {
      if (i < 0 || i >= deg)
        fail(Err::ParseError, "coefficient a" + std::to_string(i) + " out of range");
      doc.coeff_literals[i] = lit;
    }
    if (!coeff_map.count(0)) fail(Err::ParseError, "missing a0 in [extension]");
  }
  return doc;
}

std::string InputDocument::echo() const {
  std::ostringstream o;
  if (p) {
    o << "[field]\np = " << p << "\n";
    if (precision) o << "precision = " << precision << "\n";
  }
  for (auto& m : descent)
    o << "descent = (" << m.a << "*x+" << m.b << ")/(" << m.c << "*x+" << m.d << ")\n";
  if (has_extension) {
    o << "[extension]\nn = " << n << "\n";
    for (size_t i = 0; i < coeff_literals.size(); ++i)
      if (strip(coeff_literals[i]) != "0") o << "a" << i << " = " << coeff_literals[i] << "\n";
    if (!conjugate_literals.empty()) {
      o << "conjugates = ";
      for (size_t i = 0; i < conjugate_literals.size(); ++i)
        o << (i ? ", " : "") << conjugate_literals[i];
      o << "\n";
    }
  }
  if (has_abstract) {
    o << "[abstract]\nn = " << abs_n << "\nabar0 = " << abs_abar0 << "\n";
    o << "jumps = ";
    for (size_t i = 0; i < abs_jumps.size(); ++i) o << (i ? ", " : "") << abs_jumps[i];
    o << "\nuvals = ";
    for (size_t i = 0; i < abs_uvals.size(); ++i) o << (i ? ", " : "") << abs_uvals[i];
    o << "\ntable = ";
    for (size_t i = 0; i < abs_table.size(); ++i) {
      if (i) o << " / ";
      for (size_t j = 0; j < abs_table[i].size(); ++j) o << (j ? " " : "") << abs_table[i][j];
    }
    o << "\n";
  }
  if (!characters_mode.empty() || !terms.empty()) {
    o << "[representation]\n";
    if (!characters_mode.empty()) o << "characters = " << characters_mode << "\n";
    for (auto& t : terms) {
      if (t.subgroup.empty() && t.mult == 1) {
        o << "character = ";
        bool first = true;
        for (auto& [name, e] : t.theta_expo) {
          o << (first ? "" : ", ") << name << ":" << e;
          first = false;
        }
        o << "\n";
      } else {
        o << "term = " << t.mult << " * ind(H = {";
        for (size_t i = 0; i < t.subgroup.size(); ++i) o << (i ? ", " : "") << t.subgroup[i];
        o << "}; theta = ";
        bool first = true;
        for (auto& [name, e] : t.theta_expo) {
          o << (first ? "" : ", ") << name << ":" << e;
          first = false;
        }
        o << ")\n";
      }
    }
  }
  if (has_triple) {
    o << "[triple]\ndelta = " << delta << "\nrank = " << rank << "\npsi0 = " << psi0 << "\n";
    for (auto& h : horizontal)
      o << "horizontal = deg=" << h.degree << " swan=" << h.swan << " rank=" << h.rank << "\n";
    for (auto& v : vertical) {
      o << "vertical =";
      if (v.deligne)
        o << " deligne=" << *v.deligne;
      else {
        if (v.use_rep_cc) o << " cc=rep";
        o << " swbar=" << v.sw_bar << " rankbar=" << v.rank_bar;
      }
      o << "\n";
    }
  }
  return o.str();
}

}  // namespace ramcc
