#include <gtest/gtest.h>

#include "fplab/error.hpp"
#include "fplab/frobenius.hpp"
#include "fplab/hilbert.hpp"
#include "fplab/session.hpp"
#include "fplab/verify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fplab;
using fplab::test::ideal;
using fplab::test::P;

TEST(BracketPower, examples) {
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(ideal_eq(bracket_power(ideal(r, {"x", "y"}), 1), ideal(r, {"x^2", "y^2"})));
  EXPECT_TRUE(ideal_eq(bracket_power(ideal(r, {"x+y"}), 0), ideal(r, {"x+y"})));
  const Session s = parse_session(example2_session_text());
  const Ideal expected(s.ring, {P(s.ring, "w^2"), P(s.ring, "y^2+v^2"), P(s.ring, "x^2+u^2")});
  EXPECT_TRUE(ideal_eq(bracket_power(s.ideal("J"), 1), expected));
}

TEST(FrobeniusRoot, polynomials) {
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(frobenius_root(P(r, "x"), 1).is_unit());
  EXPECT_TRUE(ideal_eq(frobenius_root(P(r, "x^2*y^3"), 1), ideal(r, {"x*y"})));
  EXPECT_TRUE(ideal_eq(frobenius_root(P(r, "x^4*y^5"), 2), ideal(r, {"x*y"})));
  EXPECT_TRUE(ideal_eq(frobenius_root(P(r, "x^2 + x*y^2"), 1), ideal(r, {"x", "y"})));
  EXPECT_THROW(frobenius_root(P(r, "0"), 1), DomainError);
  auto r3 = test::ring(3, {"x", "y"});
  EXPECT_TRUE(ideal_eq(frobenius_root(P(r3, "x^3*y + 2*y^4"), 1), ideal(r3, {"x + 2*y"})));
  EXPECT_TRUE(ideal_eq(frobenius_root(P(r3, "x^3*y + 2*x^3*y^4"), 1), ideal(r3, {"x + 2*x*y"})));
}

TEST(FrobeniusRoot, ideals) {
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(ideal_eq(frobenius_root(ideal(r, {"x^2", "y^2"}), 1), ideal(r, {"x", "y"})));
}

TEST(FrobeniusRoot, hatMonomialFamily) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto fam = make_remark33_family(n, Prime(2));
    const Ideal root = frobenius_root(fam.f, 1);
    EXPECT_TRUE(ideal_eq(root, hat_monomial_ideal(fam.ring))) << n;
    std::vector<Polynomial> prods;
    for (const auto& g : root.generators()) prods.push_back(fam.f * g);
    EXPECT_TRUE(ideal_eq(frobenius_root(Ideal(fam.ring, prods), 1), root)) << n;
  }
  const auto fam = make_remark33_family(3, Prime(2));
  EXPECT_TRUE(ideal_eq(frobenius_root(pow(fam.f, 3), 2), frobenius_root(fam.f, 1)));
}

TEST(FrobeniusPreimage, examples) {
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(ideal_eq(frobenius_preimage(ideal(r, {"x^2"}), 1), ideal(r, {"x"})));
  EXPECT_TRUE(ideal_eq(frobenius_preimage(ideal(r, {"x^2+y^2"}), 1), ideal(r, {"x+y"})));
  EXPECT_TRUE(ideal_eq(frobenius_preimage(ideal(r, {"x^3", "y"}), 1), ideal(r, {"x^2", "y"})));
  EXPECT_TRUE(ideal_eq(frobenius_preimage(ideal(r, {"x*y"}), 1), ideal(r, {"x*y"})));
  EXPECT_TRUE(frobenius_preimage(Ideal(r), 1).is_zero() || frobenius_preimage(Ideal(r), 1).groebner_basis().empty());
}

TEST(FrobeniusClosure, regularRing) {
  auto r = test::ring(2, {"x", "y"});
  const Ideal J = ideal(r, {"x^2", "y"});
  const auto c = frobenius_closure(J, Ideal(r), 3);
  ASSERT_EQ(c.chain.size(), 4u);
  for (const auto& P : c.chain) EXPECT_TRUE(ideal_eq(P, J));
  EXPECT_EQ(c.stabilized_at, std::optional<std::size_t>(0));
}

TEST(FrobeniusClosure, fpureHypersurface) {
  auto r = test::ring(2, {"x", "y"});
  const Ideal I = ideal(r, {"x*y"});
  const Ideal J = ideal(r, {"x+y"});
  const auto c = frobenius_closure(J, I, 2);
  EXPECT_TRUE(ideal_eq(c.chain.at(1), ideal_sum(J, I)));
  // x^2 + y^2 = (x+y)^2 in J^[2], and (x+y)^2 is all of (x,y)^2 mod xy; still no linear form beyond x+y
  EXPECT_FALSE(ideal_member(P(r, "x"), c.chain.at(1)));
}

TEST(FrobeniusClosure, fiveVariableExample) {
  const Session s = parse_session(example2_session_text());
  const Ideal J = s.ideal("J"), I = s.ideal("I");
  const auto c = frobenius_closure(J, I, 2);
  EXPECT_FALSE(ideal_member(s.poly("v2"), c.chain.at(0)));
  EXPECT_TRUE(ideal_member(s.poly("v2"), c.chain.at(1)));
  for (std::size_t e = 0; e + 1 < c.chain.size(); ++e) EXPECT_TRUE(ideal_contains(c.chain[e + 1], c.chain[e]));
  const auto w = in_frobenius_closure(s.poly("v2"), J, I, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->e, 1u);
  EXPECT_EQ(w->q, 2u);
}

TEST(InFrobeniusClosure, trivialCases) {
  auto r = test::ring(2, {"x", "y"});
  const Ideal I = ideal(r, {"x*y"});
  const Ideal J = ideal(r, {"x"});
  EXPECT_FALSE(in_frobenius_closure(P(r, "1"), J, I, 3).has_value());
  const auto w = in_frobenius_closure(P(r, "x"), J, I, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->e, 1u);
}

TEST(Fedder, examples) {
  const Session s = parse_session(example2_session_text());
  EXPECT_TRUE(fedder_is_fpure(s.ideal("I1")));
  EXPECT_TRUE(fedder_is_fpure(s.ideal("I2")));
  EXPECT_TRUE(fedder_is_fpure(ideal_sum(s.ideal("I1"), s.ideal("I2"))));
  auto r1 = test::ring(2, {"x"});
  EXPECT_FALSE(fedder_is_fpure(ideal(r1, {"x^2"})));
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(fedder_is_fpure(ideal(r, {"x*y"})));
  EXPECT_FALSE(fedder_is_fpure(ideal(r, {"y^2 - x^3"})));
  EXPECT_TRUE(fedder_is_fpure(Ideal(r)));
  EXPECT_THROW(fedder_is_fpure(Ideal::unit(r)), DomainError);
  // cusp is F-pure in no characteristic; the node x^2 + y^2 + x^3 over F_3 is
  auto r3 = test::ring(3, {"x", "y"});
  EXPECT_FALSE(fedder_is_fpure(ideal(r3, {"y^2 - x^3"})));
  EXPECT_TRUE(fedder_is_fpure(ideal(r3, {"x*y"})));
}

TEST(Fedder, monomialIdeals) {
  // squarefree monomial ideals are F-pure; non-squarefree principal ones are not
  auto r = test::ring(2, {"x", "y", "z"});
  EXPECT_TRUE(fedder_is_fpure(ideal(r, {"x*y", "y*z"})));
  EXPECT_TRUE(fedder_is_fpure(ideal(r, {"x*y*z"})));
  EXPECT_FALSE(fedder_is_fpure(ideal(r, {"x^2*y"})));
}

TEST(Hsl, examples) {
  auto r = test::ring(2, {"x", "y"});
  const HslResult xy = hsl_hypersurface(P(r, "x*y"), 3);
  EXPECT_EQ(xy.eta, std::optional<unsigned>(0));
  const HslResult sq = hsl_hypersurface(P(r, "x^2"), 3);
  EXPECT_EQ(sq.eta, std::optional<unsigned>(1));
  EXPECT_TRUE(ideal_eq(sq.chain.chain.at(1), ideal(r, {"x"})));
  EXPECT_TRUE(ideal_eq(sq.chain.chain.at(2), ideal(r, {"x"})));
  EXPECT_THROW(hsl_hypersurface(P(r, "x + 1"), 3), DomainError);
}

TEST(Hsl, hatMonomialFamily) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto fam = make_remark33_family(n, Prime(2));
    const HslResult h = hsl_hypersurface(fam.f, 4);
    EXPECT_EQ(h.eta, std::optional<unsigned>(1)) << n;
    EXPECT_TRUE(ideal_eq(h.chain.chain.at(1), hat_monomial_ideal(fam.ring))) << n;
  }
}

TEST(InBracketMaximal, examples) {
  auto r = test::ring(2, {"x", "y"});
  EXPECT_TRUE(in_bracket_maximal(P(r, "x^2*y + y^3"), 1));
  EXPECT_FALSE(in_bracket_maximal(P(r, "x*y + y^3"), 1));
  EXPECT_TRUE(in_bracket_maximal(P(r, "0"), 2));
}
