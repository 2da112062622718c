#include "lclt/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// z<k> -> k, otherwise -1
long z_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return -1;
  return std::stol(name.substr(1));
}

Rational rational_pow(const Rational& x, unsigned e) {
  Rational r(1), base = x;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  // within a degree, later roster variables (t) sort first: 1, t, z1, t^2, z1*t, ...
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::vector<std::string> canonical_roster(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto rank = [](const std::string& n) {
    if (z_index(n) >= 0) return 0;
    if (n == "t") return 2;
    return 1;
  };
  std::stable_sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 0) return z_index(a) < z_index(b);
    return a < b;
  });
  return names;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(canonical_roster(std::move(vars))) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)) {
  if (canonical_roster(vars_) != vars_) throw Error(ErrorCode::InvalidArgument, "roster not in canonical order");
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw Error(ErrorCode::InvalidArgument, "exponent length mismatch");
    if (!lclt::is_zero(c)) terms_.emplace(e, c);
  }
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  p.insert(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
  vars.push_back(name);
  MultiPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.insert(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_univariate(const UniPoly& u, const std::string& var) {
  MultiPoly p(std::vector<std::string>{var});
  for (std::size_t k = 0; k < u.size(); ++k) p.insert(Exponent{static_cast<std::uint32_t>(k)}, u.coeffs()[k]);
  return p;
}

void MultiPoly::insert(const Exponent& e, const Rational& c) {
  if (lclt::is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (lclt::is_zero(it->second)) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

bool MultiPoly::has_var(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw Error(ErrorCode::UnknownVariable, "variable '" + name + "' not in roster");
  return static_cast<std::size_t>(it - vars_.begin());
}

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree(const std::string& var) const {
  if (!has_var(var)) return 0;
  std::size_t i = var_index(var);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& roster) const {
  MultiPoly out(roster);
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(out.vars_.begin(), out.vars_.end(), vars_[i]);
    if (it == out.vars_.end()) {
      for (const auto& [e, c] : terms_)
        if (e[i] > 0) throw Error(ErrorCode::UnknownVariable, "roster drops used variable '" + vars_[i] + "'");
      map[i] = static_cast<std::size_t>(-1);
    } else {
      map[i] = static_cast<std::size_t>(it - out.vars_.begin());
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponent ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] != static_cast<std::size_t>(-1)) ne[map[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

namespace {

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() == b.vars()) return {a, b};
  std::vector<std::string> all = a.vars();
  all.insert(all.end(), b.vars().begin(), b.vars().end());
  auto roster = canonical_roster(all);
  return {a.with_vars(roster), b.with_vars(roster)};
}

}  // namespace

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  auto [x, y] = aligned(a, b);
  for (const auto& [e, c] : y.terms_) x.insert(e, c);
  return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  auto [x, y] = aligned(a, b);
  for (const auto& [e, c] : y.terms_) x.insert(e, -c);
  return x;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  auto [x, y] = aligned(a, b);
  MultiPoly out(x.vars_);
  Exponent e(x.vars_.size());
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert(e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  if (lclt::is_zero(s)) return MultiPoly(a.vars_);
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  auto [x, y] = aligned(a, b);
  return x.terms_ == y.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(Rational(1), vars_);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  MultiPoly out(vars_);
  if (!has_var(var)) return out;
  std::size_t i = var_index(var);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent ne = e;
    --ne[i];
    out.insert(ne, c * static_cast<unsigned long>(e[i]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Binding>& bindings) const {
  for (const auto& [name, b] : bindings) var_index(name);
  if (bindings.empty()) return *this;

  std::vector<std::string> kept;
  for (const auto& v : vars_)
    if (!bindings.count(v)) kept.push_back(v);
  std::vector<std::string> roster = kept;
  for (const auto& [name, b] : bindings)
    if (auto* p = std::get_if<MultiPoly>(&b)) roster.insert(roster.end(), p->vars().begin(), p->vars().end());
  roster = canonical_roster(roster);

  // powers of each bound value, cached per (variable, exponent)
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> cache;
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(i, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Binding& b = bindings.at(vars_[i]);
    MultiPoly value = std::holds_alternative<Rational>(b) ? constant(std::get<Rational>(b), roster)
                                                          : std::get<MultiPoly>(b).with_vars(roster);
    return cache.emplace(key, value.pow(k)).first->second;
  };

  MultiPoly out(roster);
  for (const auto& [e, c] : terms_) {
    Exponent base(roster.size(), 0);
    MultiPoly term(roster);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (bindings.count(vars_[i])) continue;
      auto pos = static_cast<std::size_t>(std::find(roster.begin(), roster.end(), vars_[i]) - roster.begin());
      base[pos] = e[i];
    }
    term.insert(base, c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0 && bindings.count(vars_[i])) term = term * power_of(i, e[i]);
    out = out + term;
  }
  // drop roster variables that no longer occur, keeping the unbound ones
  std::vector<std::string> final_roster = kept;
  for (const auto& v : out.used_vars()) final_roster.push_back(v);
  return out.with_vars(canonical_roster(final_roster));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) {
      bool used = false;
      for (const auto& [e, c] : terms_) used = used || e[i] > 0;
      if (used) throw Error(ErrorCode::UnknownVariable, "no value for variable '" + vars_[i] + "'");
      continue;
    }
    values[i] = it->second;
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rational_pow(values[i], e[i]);
    sum += term;
  }
  return sum;
}

IntervalValue MultiPoly::eval_interval(const std::map<std::string, IntervalValue>& box) const {
  std::vector<IntervalValue> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = box.find(vars_[i]);
    if (it == box.end()) throw Error(ErrorCode::UnknownVariable, "box misses variable '" + vars_[i] + "'");
    values[i] = it->second;
  }
  IntervalValue sum(Rational(0));
  for (const auto& [e, c] : terms_) {
    IntervalValue term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * values[i].pow(e[i]);
    sum = sum + term;
  }
  return sum;
}

UniPoly MultiPoly::to_univariate(const std::string& var) const {
  std::size_t idx = has_var(var) ? var_index(var) : vars_.size();
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx && e[i] > 0)
        throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in '" + var + "'");
    std::size_t k = idx < e.size() ? e[idx] : 0;
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
    coeffs[k] += c;
  }
  return UniPoly(std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << a.get_str();
    else if (a == 1)
      out << mono;
    else
      out << a.get_str() << "*" << mono;
  }
  return out.str();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return p + q;
    case ArithKind::Sub: return p - q;
    case ArithKind::Mul: return p * q;
  }
  return p;
}

}  // namespace lclt
