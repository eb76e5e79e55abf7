// Ring presentations k[x_1..x_n]/I over F_p and their finite monomial bases.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorentest/field_matrix.hpp"

namespace gorentest {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::vector<std::uint32_t>;

/// Degree reverse lexicographic comparison: true when a < b.
bool degrevlex_less(const Exponent& a, const Exponent& b);

struct DegrevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return degrevlex_less(a, b);
  }
};

/// Sparse polynomial; terms keyed by exponent, no zero coefficients stored.
class PolyExpr {
 public:
  using Terms = std::map<Exponent, Elem, DegrevlexLess>;

  PolyExpr(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, Elem c);
  /// Largest exponent under degrevlex; polynomial must be nonzero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  Elem leading_coefficient() const { return terms_.rbegin()->second; }
  Elem constant_term() const;

  PolyExpr times_term(const Exponent& e, Elem c) const;
  PolyExpr& operator+=(const PolyExpr& o);
  PolyExpr monic() const;

  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  Terms terms_;
};

/// Parses a sum of terms such as "2*x^2 - x*y + y^3". Throws ParseError.
PolyExpr parse_poly(const std::string& text, const std::vector<std::string>& vars,
                    PrimeField field);

struct RingPresentation {
  PrimeField field;
  std::vector<std::string> vars;
  std::vector<PolyExpr> relations;

  /// Checks distinct variable names, nonempty relations and zero constant
  /// terms. Throws PresentationError.
  void validate() const;
};

struct GroebnerOptions {
  std::size_t max_pairs = 10000;
};

/// Reduced Groebner basis (degrevlex, monic, sorted by leading exponent).
/// Throws PresentationError when the quotient is not finite dimensional or
/// the pair budget is exhausted.
std::vector<PolyExpr> groebner_zero_dim(const std::vector<PolyExpr>& relations,
                                        const GroebnerOptions& opts = {});

/// Normal form of f modulo a Groebner basis.
PolyExpr normal_form(const PolyExpr& f, const std::vector<PolyExpr>& basis);

struct StandardBasis {
  std::vector<Exponent> monomials;  // monomials[0] is 1, degrevlex ascending
  std::vector<std::string> labels;
  /// constants[(i * d + j) * d + k] = coefficient of basis k in b_i * b_j.
  std::vector<Elem> constants;
  std::vector<PolyExpr> groebner;
};

StandardBasis standard_basis(const RingPresentation& pres, std::size_t dim_cap = 64,
                             const GroebnerOptions& opts = {});

}  // namespace gorentest
