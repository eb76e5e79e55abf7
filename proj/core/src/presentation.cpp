#include "gorentest/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace gorentest {

namespace {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars,
             PrimeField field)
      : text_(text), vars_(vars), field_(field) {}

  PolyExpr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    PolyExpr out(field_, vars_.size());
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, negative ? field_.neg(c) : c);
      skip_ws();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-')
        throw error("unexpected character '" + std::string(1, peek()) + "'");
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  ParseError error(const std::string& msg) const {
    return ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  std::uint64_t integer(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) throw error(std::string(what) + " too large");
      ++pos_;
    }
    return v;
  }

  std::pair<Exponent, Elem> term() {
    Exponent e(vars_.size(), 0);
    Elem c = 1;
    while (true) {
      skip_ws();
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = field_.mul(c, field_.reduce(static_cast<std::int64_t>(integer("coefficient") %
                                                                   field_.characteristic())));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw error("unknown variable '" + name + "'");
        std::uint64_t power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw error("malformed exponent after '" + name + "^'");
          power = integer("exponent");
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += static_cast<std::uint32_t>(power);
      } else {
        throw error(ch ? "unexpected character '" + std::string(1, ch) + "'"
                       : std::string("unexpected end of input"));
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, c};
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

// Reduces f completely modulo `basis`; returns the remainder.
PolyExpr reduce_full(PolyExpr f, const std::vector<PolyExpr>& basis) {
  PolyExpr rem(f.field(), f.nvars());
  const PrimeField& k = f.field();
  while (!f.is_zero()) {
    const Exponent lead = f.leading_exponent();
    const Elem lc = f.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.leading_exponent(), lead)) continue;
      const Elem factor = k.mul(lc, k.inv(g.leading_coefficient()));
      f += g.times_term(quotient(lead, g.leading_exponent()), k.neg(factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lead, lc);
      f.add_term(lead, k.neg(lc));
    }
  }
  return rem;
}

PolyExpr s_polynomial(const PolyExpr& f, const PolyExpr& g) {
  const Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  const PrimeField& k = f.field();
  PolyExpr s = f.times_term(quotient(l, f.leading_exponent()), k.inv(f.leading_coefficient()));
  s += g.times_term(quotient(l, g.leading_exponent()), k.neg(k.inv(g.leading_coefficient())));
  return s;
}

}  // namespace

bool degrevlex_less(const Exponent& a, const Exponent& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

void PolyExpr::add_term(const Exponent& e, Elem c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Elem PolyExpr::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? 0 : it->second;
}

PolyExpr PolyExpr::times_term(const Exponent& e, Elem c) const {
  PolyExpr out(field_, nvars_);
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) {
    Exponent s(m);
    for (std::size_t i = 0; i < nvars_; ++i) s[i] += e[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(s), field_.mul(a, c));
  }
  return out;
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyExpr PolyExpr::monic() const {
  if (is_zero()) return *this;
  return times_term(Exponent(nvars_, 0), field_.inv(leading_coefficient()));
}

std::string PolyExpr::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    const bool unit = total_degree(e) == 0;
    if (c != 1 || unit) os << c << (unit ? "" : "*");
    bool firstvar = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!firstvar) os << '*';
      firstvar = false;
      os << vars.at(i);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

PolyExpr parse_poly(const std::string& text, const std::vector<std::string>& vars,
                    PrimeField field) {
  return PolyParser(text, vars, field).parse();
}

void RingPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw PresentationError("empty variable name");
    if (!seen.insert(v).second) throw PresentationError("duplicate variable '" + v + "'");
  }
  if (relations.empty()) throw PresentationError("no relations given");
  for (const auto& r : relations) {
    if (r.nvars() != vars.size()) throw PresentationError("relation has wrong arity");
    if (r.constant_term() != 0)
      throw PresentationError("relation " + r.to_string(vars) +
                              " has a nonzero constant term; variables must lie in the "
                              "maximal ideal");
  }
}

PolyExpr normal_form(const PolyExpr& f, const std::vector<PolyExpr>& basis) {
  return reduce_full(f, basis);
}

std::vector<PolyExpr> groebner_zero_dim(const std::vector<PolyExpr>& relations,
                                        const GroebnerOptions& opts) {
  if (relations.empty()) throw PresentationError("no relations given");
  const std::size_t n = relations.front().nvars();
  std::vector<PolyExpr> g;
  for (const auto& r : relations)
    if (!r.is_zero()) g.push_back(r.monic());

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    done.insert({i, j});
    if (++processed > opts.max_pairs)
      throw PresentationError("Groebner pair budget of " + std::to_string(opts.max_pairs) +
                              " S-pairs exhausted");
    const Exponent& li = g[i].leading_exponent();
    const Exponent& lj = g[j].leading_exponent();
    if (coprime(li, lj)) continue;  // product criterion
    const Exponent l = lcm(li, lj);
    bool chain = false;  // chain criterion
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].leading_exponent(), l)) continue;
      chain = done.count({std::min(i, k), std::max(i, k)}) &&
              done.count({std::min(j, k), std::max(j, k)});
    }
    if (chain) continue;
    PolyExpr r = reduce_full(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<PolyExpr> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !divides(g[k].leading_exponent(), g[i].leading_exponent())) continue;
      redundant = g[k].leading_exponent() != g[i].leading_exponent() || k < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<PolyExpr> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyExpr> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const Exponent lead = minimal[i].leading_exponent();
    PolyExpr tail = minimal[i];
    tail.add_term(lead, tail.field().neg(tail.leading_coefficient()));
    PolyExpr r(tail.field(), n);
    r.add_term(lead, 1);
    r += reduce_full(tail, others);
    reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const PolyExpr& a, const PolyExpr& b) {
    return degrevlex_less(a.leading_exponent(), b.leading_exponent());
  });

  for (std::size_t v = 0; v < n; ++v) {
    const bool has_pure_power = std::any_of(reduced.begin(), reduced.end(), [&](const PolyExpr& p) {
      const Exponent& e = p.leading_exponent();
      for (std::size_t i = 0; i < n; ++i)
        if ((i == v) != (e[i] > 0)) return false;
      return true;
    });
    if (!has_pure_power)
      throw PresentationError("not zero-dimensional: no leading term is a pure power of variable " +
                              std::to_string(v + 1));
  }
  return reduced;
}

StandardBasis standard_basis(const RingPresentation& pres, std::size_t dim_cap,
                             const GroebnerOptions& opts) {
  pres.validate();
  const std::size_t n = pres.vars.size();
  StandardBasis out;
  out.groebner = groebner_zero_dim(pres.relations, opts);
  for (const auto& g : out.groebner)
    if (total_degree(g.leading_exponent()) == 0)
      throw PresentationError("the ideal contains a unit; quotient ring is zero");

  auto is_standard = [&](const Exponent& e) {
    return std::none_of(out.groebner.begin(), out.groebner.end(),
                        [&](const PolyExpr& g) { return divides(g.leading_exponent(), e); });
  };
  std::set<Exponent, DegrevlexLess> found{Exponent(n, 0)};
  std::deque<Exponent> frontier{Exponent(n, 0)};
  while (!frontier.empty()) {
    Exponent e = frontier.front();
    frontier.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      Exponent f = e;
      ++f[v];
      if (!is_standard(f) || found.count(f)) continue;
      found.insert(f);
      if (found.size() > dim_cap)
        throw PresentationError("algebra dimension exceeds the cap of " + std::to_string(dim_cap));
      frontier.push_back(std::move(f));
    }
  }
  out.monomials.assign(found.begin(), found.end());
  const std::size_t d = out.monomials.size();
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) {
    index[out.monomials[i]] = i;
    std::string label;
    for (std::size_t v = 0; v < n; ++v) {
      if (!out.monomials[i][v]) continue;
      if (!label.empty()) label += '*';
      label += pres.vars[v];
      if (out.monomials[i][v] > 1) label += '^' + std::to_string(out.monomials[i][v]);
    }
    out.labels.push_back(label.empty() ? "1" : label);
  }
  out.constants.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      PolyExpr prod(pres.field, n);
      Exponent e = out.monomials[i];
      for (std::size_t v = 0; v < n; ++v) e[v] += out.monomials[j][v];
      prod.add_term(e, 1);
      const PolyExpr nf = reduce_full(prod, out.groebner);
      for (const auto& [m, c] : nf.terms()) out.constants[(i * d + j) * d + index.at(m)] = c;
    }
  return out;
}

}  // namespace gorentest
