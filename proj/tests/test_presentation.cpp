#include <gtest/gtest.h>

#include <set>

#include "gorentest/algebra.hpp"
#include "gorentest/presentation.hpp"
#include "support.hpp"

using namespace gorentest;

namespace {

PolyExpr P(const std::string& s, const std::vector<std::string>& vars, std::uint64_t p = 3) {
  return parse_poly(s, vars, PrimeField(p));
}

}  // namespace

TEST(Parse, TermsAndCoefficients) {
  const std::vector<std::string> v{"x", "y"};
  const auto f = P("2*x^2 - x*y + y^3 + 4", v);
  EXPECT_EQ(f.terms().size(), 4u);
  EXPECT_EQ(f.terms().at({2, 0}), 2u);
  EXPECT_EQ(f.terms().at({1, 1}), 2u);  // -1 mod 3
  EXPECT_EQ(f.constant_term(), 1u);
  EXPECT_TRUE(P("x*y - y*x", v).is_zero());
  EXPECT_EQ(P("3*x", v).is_zero(), true);
}

TEST(Parse, Malformed) {
  const std::vector<std::string> v{"x", "y"};
  for (const char* bad : {"x^", "2*", "z", "x^-1", "x +", "x y", "", "(x)"})
    EXPECT_THROW(P(bad, v), ParseError) << bad;
}

TEST(Presentation, Validate) {
  const PrimeField f(2);
  RingPresentation dup{f, {"x", "x"}, {P("x^2", {"x", "x"}, 2)}};
  EXPECT_THROW(dup.validate(), PresentationError);
  RingPresentation unit{f, {"x"}, {P("x^2 + 1", {"x"}, 2)}};
  EXPECT_THROW(unit.validate(), PresentationError);
  RingPresentation none{f, {"x"}, {}};
  EXPECT_THROW(none.validate(), PresentationError);
}

TEST(Groebner, ReducedBasisByHand) {
  // x^2 - y^2, xy over F_3: adds y^3 = y * (y^2 - x^2) + x * (xy).
  const std::vector<std::string> v{"x", "y"};
  const auto g = groebner_zero_dim({P("x^2 - y^2", v), P("x*y", v)});
  std::vector<PolyExpr> expect{P("x*y", v), P("x^2 - y^2", v).monic(), P("y^3", v)};
  // Membership both ways instead of relying on order.
  for (const auto& e : expect) EXPECT_TRUE(normal_form(e, g).is_zero());
  for (const auto& h : g) EXPECT_TRUE(normal_form(h, expect).is_zero());
  ASSERT_EQ(g.size(), 3u);
  std::set<Exponent> lead;
  for (const auto& h : g) lead.insert(h.leading_exponent());
  EXPECT_EQ(lead, (std::set<Exponent>{{1, 1}, {2, 0}, {0, 3}}));
  EXPECT_FALSE(normal_form(P("y^2", v), g).is_zero());
}

TEST(Groebner, NotZeroDimensional) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_THROW(groebner_zero_dim({P("x^2", v)}), PresentationError);
  EXPECT_THROW(groebner_zero_dim({P("x*y", v), P("x^3", v)}), PresentationError);
}

TEST(StandardBasis, DimensionsByHand) {
  const std::vector<std::size_t> dims{3, 4, 2, 4, 3, 4, 4, 3};
  const auto rings = testing_support::corpus_rings();
  ASSERT_EQ(rings.size(), dims.size());
  for (std::size_t i = 0; i < rings.size(); ++i) EXPECT_EQ(rings[i].r->dim(), dims[i]) << rings[i].id;
}

TEST(StandardBasis, DimCap) {
  const PrimeField f(2);
  const std::vector<std::string> v{"x", "y"};
  RingPresentation big{f, v, {P("x^9", v, 2), P("y^9", v, 2)}};
  EXPECT_THROW(standard_basis(big, 64), PresentationError);
  EXPECT_EQ(standard_basis(big, 81).monomials.size(), 81u);
}
