#include "lclt/gfparse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Node {
  enum Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg } kind;
  std::size_t pos = 0;
  Rational value;
  std::string name;
  unsigned exponent = 0;
  std::unique_ptr<Node> a, b;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, std::size_t pos, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->pos = pos;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (i_ != s_.size()) fail_at(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw SyntaxError(ErrorCode::SyntaxError, pos, msg);
  }
  [[noreturn]] void nonrational_at(std::size_t pos, const std::string& msg) const {
    throw SyntaxError(ErrorCode::NonRational, pos, msg);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }

  NodePtr expr() {
    skip_ws();
    std::size_t start = i_;
    NodePtr left;
    if (accept('-'))
      left = make_node(Node::Neg, start, term());
    else
      left = term();
    while (true) {
      skip_ws();
      std::size_t at = i_;
      if (accept('+'))
        left = make_node(Node::Add, at, std::move(left), term());
      else if (accept('-'))
        left = make_node(Node::Sub, at, std::move(left), term());
      else
        return left;
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    while (true) {
      skip_ws();
      std::size_t at = i_;
      if (accept('*'))
        left = make_node(Node::Mul, at, std::move(left), factor());
      else if (accept('/'))
        left = make_node(Node::Div, at, std::move(left), factor());
      else
        return left;
    }
  }

  NodePtr factor() {
    NodePtr b = base();
    skip_ws();
    std::size_t at = i_;
    if (!accept('^')) return b;
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    std::size_t digits_at = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      nonrational_at(digits_at, "exponent must be a non-negative integer");
    std::string digits;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits.push_back(s_[i_++]);
    if (paren && !accept(')')) nonrational_at(i_, "exponent must be a non-negative integer");
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
      nonrational_at(digits_at, "exponent too large (limit " + std::to_string(kMaxExponent) + ")");
    if (peek('^')) fail_at(i_, "chained '^' needs parentheses");
    auto n = make_node(Node::Pow, at, std::move(b));
    n->exponent = static_cast<unsigned>(std::stoul(digits));
    return n;
  }

  NodePtr base() {
    skip_ws();
    std::size_t at = i_;
    if (i_ >= s_.size()) fail_at(at, "unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodePtr e = expr();
      if (!accept(')')) fail_at(i_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits.push_back(s_[i_++]);
      if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
        fail_at(i_, "only integer and p/q literals are allowed");
      auto n = make_node(Node::Num, at);
      n->value = Rational(Integer(digits, 10));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) id.push_back(s_[i_++]);
      bool z_var = id.size() >= 2 && id[0] == 'z';
      for (std::size_t k = 1; z_var && k < id.size(); ++k) z_var = std::isdigit(static_cast<unsigned char>(id[k])) != 0;
      if (peek('(')) nonrational_at(at, "function '" + id + "' is not a rational operation");
      if (id != "t" && !z_var) nonrational_at(at, "unknown identifier '" + id + "' (variables are z1, z2, ... and t)");
      auto n = make_node(Node::Var, at);
      n->name = id;
      return n;
    }
    fail_at(at, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

bool only_t(const MultiPoly& p) {
  for (const auto& v : p.used_vars())
    if (v != "t") return false;
  return true;
}

Fraction frac_add(const Fraction& x, const Fraction& y, bool subtract) {
  auto combine = [&](const MultiPoly& a, const MultiPoly& b) { return subtract ? a - b : a + b; };
  if (x.den == y.den) return {combine(x.num, y.num), x.den};
  if (only_t(x.den) && only_t(y.den)) {
    UniPoly dx = x.den.to_univariate("t"), dy = y.den.to_univariate("t");
    UniPoly g = gcd(dx, dy);
    UniPoly cx = divmod(dy, g).first, cy = divmod(dx, g).first;
    return {combine(x.num * MultiPoly::from_univariate(cx, "t"), y.num * MultiPoly::from_univariate(cy, "t")),
            MultiPoly::from_univariate(dx * cx, "t")};
  }
  return {combine(x.num * y.den, y.num * x.den), x.den * y.den};
}

Fraction to_fraction(const Node& n) {
  switch (n.kind) {
    case Node::Num: return {MultiPoly::constant(n.value), MultiPoly::constant(Rational(1))};
    case Node::Var: return {MultiPoly::variable(n.name), MultiPoly::constant(Rational(1))};
    case Node::Neg: {
      Fraction f = to_fraction(*n.a);
      return {-f.num, f.den};
    }
    case Node::Add: return frac_add(to_fraction(*n.a), to_fraction(*n.b), false);
    case Node::Sub: return frac_add(to_fraction(*n.a), to_fraction(*n.b), true);
    case Node::Mul: {
      Fraction x = to_fraction(*n.a), y = to_fraction(*n.b);
      return {x.num * y.num, x.den * y.den};
    }
    case Node::Div: {
      Fraction x = to_fraction(*n.a), y = to_fraction(*n.b);
      if (y.num.is_zero()) throw SyntaxError(ErrorCode::DivisionByZero, n.pos, "division by zero");
      return {x.num * y.den, x.den * y.num};
    }
    case Node::Pow: {
      Fraction f = to_fraction(*n.a);
      if (n.exponent == 0 && f.num.is_zero()) throw SyntaxError(ErrorCode::NonRational, n.pos, "0^0 is undefined");
      return {f.num.pow(n.exponent), f.den.pow(n.exponent)};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression node");
}

// ---- positive-series shape analysis ----

bool is_positive_series(const Node& n);

bool zero_constant_series(const Node& n) {
  Fraction f = to_fraction(n);
  return sgn(f.den.constant_term()) != 0 && sgn(f.num.constant_term()) == 0;
}

// n = c - X_1 - ... - X_k with c > 0, each X_i a positive series without constant term
bool one_minus_chain(const Node& n, Rational& c, std::vector<const Node*>& subtracted) {
  const Node* cur = &n;
  std::vector<const Node*> terms;
  while (cur->kind == Node::Sub) {
    terms.push_back(cur->b.get());
    cur = cur->a.get();
  }
  if (cur->kind != Node::Num || sgn(cur->value) <= 0) return false;
  for (const Node* x : terms)
    if (!is_positive_series(*x) || !zero_constant_series(*x)) return false;
  c = cur->value;
  subtracted.assign(terms.rbegin(), terms.rend());
  return true;
}

bool positive_denominator(const Node& n) {
  Rational c;
  std::vector<const Node*> terms;
  if (one_minus_chain(n, c, terms)) return true;
  if (n.kind == Node::Mul) return positive_denominator(*n.a) && positive_denominator(*n.b);
  if (n.kind == Node::Pow) return positive_denominator(*n.a);
  return false;
}

bool is_positive_series(const Node& n) {
  switch (n.kind) {
    case Node::Num: return sgn(n.value) >= 0;
    case Node::Var: return true;
    case Node::Add:
    case Node::Mul: return is_positive_series(*n.a) && is_positive_series(*n.b);
    case Node::Pow: return is_positive_series(*n.a);
    case Node::Div: return is_positive_series(*n.a) && positive_denominator(*n.b);
    case Node::Sub:
    case Node::Neg: return false;
  }
  return false;
}

MultiPoly divide_monomial(const MultiPoly& p, const Exponent& e) {
  MultiPoly::TermMap terms;
  for (const auto& [exp, c] : p.terms()) {
    Exponent ne = exp;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= e[i];
    terms.emplace(std::move(ne), c);
  }
  return MultiPoly(p.vars(), std::move(terms));
}

bool nonnegative_coefficients(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (sgn(c) < 0) return false;
  return true;
}

RationalGF normalize(MultiPoly G, MultiPoly H) {
  if (H.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator is zero");
  if (G.is_zero()) throw Error(ErrorCode::InvalidGeneratingFunction, "numerator is zero");
  std::vector<std::string> names = G.used_vars();
  for (const auto& v : H.used_vars()) names.push_back(v);
  names.push_back("t");
  auto roster = canonical_roster(names);
  G = G.with_vars(roster);
  H = H.with_vars(roster);

  // shared monomial factor
  Exponent shared(roster.size(), std::numeric_limits<std::uint32_t>::max());
  for (const auto* p : {&G, &H})
    for (const auto& [e, c] : p->terms())
      for (std::size_t i = 0; i < e.size(); ++i) shared[i] = std::min(shared[i], e[i]);
  bool any = false;
  for (auto x : shared) any = any || x > 0;
  if (any) {
    G = divide_monomial(G, shared);
    H = divide_monomial(H, shared);
  }

  Rational h0 = H.constant_term();
  if (sgn(h0) == 0) throw Error(ErrorCode::ZeroDenominatorAtOrigin, "H(0,...,0) = 0, no power series at the origin");
  Rational scale = 1 / h0;
  G = scale * G;
  H = scale * H;
  if (H.is_constant()) throw Error(ErrorCode::InvalidGeneratingFunction, "H is constant (F is a polynomial)");

  RationalGF gf;
  gf.G = std::move(G);
  gf.H = std::move(H);
  for (const auto& v : roster)
    if (v != "t") gf.tracked.push_back(v);
  return gf;
}

// Largest D(t) with D(0) = 1 dividing every z-dependent coefficient of H in Q[t].
std::optional<UniPoly> shared_t_factor(const MultiPoly& H) {
  if (!H.has_var("t")) return std::nullopt;
  std::size_t ti = H.var_index("t");
  std::map<Exponent, std::vector<Rational>> groups;
  for (const auto& [e, c] : H.terms()) {
    Exponent key = e;
    key[ti] = 0;
    if (std::all_of(key.begin(), key.end(), [](std::uint32_t x) { return x == 0; })) continue;
    auto& v = groups[key];
    if (v.size() <= e[ti]) v.resize(e[ti] + 1, Rational(0));
    v[e[ti]] += c;
  }
  std::optional<UniPoly> g;
  for (auto& [key, v] : groups) {
    UniPoly p(std::move(v));
    g = g ? gcd(*g, p) : p;
  }
  if (!g) return std::nullopt;
  std::vector<Rational> c = g->coeffs();
  while (!c.empty() && sgn(c.front()) == 0) c.erase(c.begin());
  if (c.size() <= 1) return std::nullopt;
  Rational inv = 1 / c.front();
  for (auto& x : c) x *= inv;
  return UniPoly(std::move(c));
}

void infer_from_cleared(RationalGF& gf) {
  MultiPoly one = MultiPoly::constant(Rational(1), gf.H.vars());
  MultiPoly S = one - gf.H;
  if (!nonnegative_coefficients(S)) {
    // H = D(t) (1 - S) after clearing a common factor
    if (gf.S) return;
    if (auto D = shared_t_factor(gf.H)) {
      MultiPoly Dm = MultiPoly::from_univariate(*D, "t").with_vars(gf.H.vars());
      gf.S = Fraction{Dm - gf.H, Dm};
    }
    return;
  }
  if (!gf.S) gf.S = Fraction{S, one};
  if (nonnegative_coefficients(gf.G)) {
    gf.combinatorial = true;
    gf.combinatorial_inferred = true;
  }
}

}  // namespace

std::string RationalGF::to_string() const { return "(" + G.to_string() + ")/(" + H.to_string() + ")"; }

RationalGF parse_gf(const std::string& text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  Fraction f = to_fraction(*root);
  RationalGF gf = normalize(f.num, f.den);
  gf.source = text;

  if (root->kind == Node::Div) {
    Rational c;
    std::vector<const Node*> terms;
    if (one_minus_chain(*root->b, c, terms) && !terms.empty()) {
      Fraction s{MultiPoly::constant(Rational(0)), MultiPoly::constant(Rational(1))};
      for (const Node* x : terms) s = frac_add(s, to_fraction(*x), false);
      s.den = c * s.den;
      gf.S = s;
    }
  }
  if (is_positive_series(*root)) {
    gf.combinatorial = true;
    gf.combinatorial_inferred = true;
  }
  infer_from_cleared(gf);
  gf.linear_family = series_linear_family(gf);
  if (!gf.linear_family) gf.linear_family = detect_linear_family(gf);
  return gf;
}

RationalGF make_gf(const MultiPoly& G, const MultiPoly& H) {
  RationalGF gf = normalize(G, H);
  gf.source = gf.to_string();
  infer_from_cleared(gf);
  gf.linear_family = detect_linear_family(gf);
  return gf;
}

namespace {

// Splits p into its z-free part and the coefficients of each tracked z_k, all univariate in t.
// Fails when a term has total z-degree above 1.
bool split_linear(const MultiPoly& p, const std::vector<std::string>& tracked, UniPoly& constant_part,
                  std::vector<UniPoly>& linear_parts) {
  linear_parts.assign(tracked.size(), UniPoly{});
  std::vector<Rational> c0;
  std::vector<std::vector<Rational>> ck(tracked.size());
  std::size_t t_index = p.has_var("t") ? p.var_index("t") : p.vars().size();
  for (const auto& [e, c] : p.terms()) {
    int which = -1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == t_index || e[i] == 0) continue;
      if (e[i] > 1 || which >= 0) return false;
      auto it = std::find(tracked.begin(), tracked.end(), p.vars()[i]);
      if (it == tracked.end()) return false;
      which = static_cast<int>(it - tracked.begin());
    }
    std::size_t k = t_index < e.size() ? e[t_index] : 0;
    auto& target = which < 0 ? c0 : ck[static_cast<std::size_t>(which)];
    if (target.size() <= k) target.resize(k + 1, Rational(0));
    target[k] += c;
  }
  constant_part = UniPoly(std::move(c0));
  for (std::size_t k = 0; k < tracked.size(); ++k) linear_parts[k] = UniPoly(std::move(ck[k]));
  return true;
}

}  // namespace

std::optional<LinearFamily> detect_linear_family(const RationalGF& gf) {
  UniPoly h0;
  std::vector<UniPoly> hk;
  if (!split_linear(gf.H, gf.tracked, h0, hk)) return std::nullopt;
  LinearFamily lf;
  lf.q = UniRational{UniPoly::constant(Rational(1)) - h0};
  for (auto& p : hk) {
    if (p.is_zero() || sgn(p.coeff(0)) != 0) return std::nullopt;
    lf.q_list.push_back(UniRational{-p});
  }
  if (sgn(lf.q.num.coeff(0)) != 0) return std::nullopt;
  lf.q_vanishes = lf.q.num.is_zero();
  return lf;
}

std::optional<LinearFamily> series_linear_family(const RationalGF& gf) {
  if (!gf.S || !only_t(gf.S->den)) return std::nullopt;
  UniPoly den = gf.S->den.to_univariate("t");
  UniPoly n0;
  std::vector<UniPoly> nk;
  if (!split_linear(gf.S->num, gf.tracked, n0, nk)) return std::nullopt;
  LinearFamily lf;
  lf.from_series = true;
  lf.q = UniRational{n0, den}.reduced();
  for (auto& p : nk) {
    if (p.is_zero()) return std::nullopt;
    UniRational qk = UniRational{p, den}.reduced();
    if (sgn(qk.num.coeff(0)) != 0) return std::nullopt;
    lf.q_list.push_back(qk);
  }
  if (sgn(lf.q.num.coeff(0)) != 0) return std::nullopt;
  lf.q_vanishes = lf.q.num.is_zero();
  return lf;
}

Fraction linear_family_denominator(const LinearFamily& lf, const std::vector<std::string>& tracked) {
  UniPoly common = lf.q.den;
  for (const auto& qk : lf.q_list) {
    UniPoly g = gcd(common, qk.den);
    common = common * divmod(qk.den, g).first;
  }
  auto scaled = [&](const UniRational& r) {
    return MultiPoly::from_univariate(r.num * divmod(common, r.den).first, "t");
  };
  MultiPoly h = MultiPoly::from_univariate(common, "t") - scaled(lf.q);
  for (std::size_t k = 0; k < lf.q_list.size(); ++k) h = h - scaled(lf.q_list[k]) * MultiPoly::variable(tracked[k]);
  return {h, MultiPoly::from_univariate(common, "t")};
}

std::map<Exponent, Rational, GrlexLess> truncated_series(const MultiPoly& num_in, const MultiPoly& den_in,
                                                         unsigned K) {
  std::vector<std::string> names = num_in.vars();
  names.insert(names.end(), den_in.vars().begin(), den_in.vars().end());
  auto roster = canonical_roster(names);
  MultiPoly num = num_in.with_vars(roster), den = den_in.with_vars(roster);
  Rational d0 = den.constant_term();
  if (sgn(d0) == 0) throw Error(ErrorCode::ZeroDenominatorAtOrigin, "series denominator vanishes at the origin");
  MultiPoly tail = den - MultiPoly::constant(d0, roster);
  Rational inv = 1 / d0;

  auto truncate = [&](const MultiPoly& p) {
    MultiPoly::TermMap kept;
    for (const auto& [e, c] : p.terms()) {
      unsigned deg = 0;
      for (auto x : e) deg += x;
      if (deg <= K) kept.emplace(e, c);
    }
    return MultiPoly(roster, std::move(kept));
  };
  // f = (num - tail*f)/d0; each pass fixes one more total degree
  MultiPoly f = truncate(inv * num);
  for (unsigned pass = 0; pass < K; ++pass) f = truncate(inv * (num - truncate(tail * f)));
  std::map<Exponent, Rational, GrlexLess> out(f.terms().begin(), f.terms().end());
  return out;
}

}  // namespace lclt
