#include "admlab/deligne.hpp"

#include <gtest/gtest.h>

namespace admlab {
void PrintTo(const Expr& e, std::ostream* os) { *os << e.to_string(); }
void PrintTo(const PolyGD& e, std::ostream* os) { *os << e.to_string(); }

namespace {

PolyGD p(const char* s) { return PolyGD::parse(s); }
Expr P(const Expr& a, const Expr& b) { return normalize(pairing(PushMap::Pi, {a, b})); }
Expr P3(const Expr& a, const Expr& b, const Expr& c) { return normalize(pairing(PushMap::PiPi, {a, b, c})); }
Expr w1() { return pr1(omega()); }
Expr w2() { return pr2(omega()); }

TEST(PolyGDTest, ArithmeticAndParsing) {
  const PolyGD g = PolyGD::g();
  EXPECT_EQ(p("16g(g-1)^3"), PolyGD(16) * g * (g - PolyGD(1)).pow(3));
  EXPECT_EQ(p("16g(g-1)^3").to_string(), "16g^4 - 48g^3 + 48g^2 - 16g");
  EXPECT_EQ(p("1 + 39(3g-1)(2g-1)/2"), p("117g^2 - 195g/2 + 41/2"));
  EXPECT_EQ(p("3g/2").to_string(), "(3/2)g");
  EXPECT_EQ(p("-(4g-4)d^2").coefficient(1, 2), Rational(-4));
  EXPECT_EQ(p("2g-2").evaluate(Rational(5), Rational(0)), Rational(8));
  EXPECT_EQ(p("d^2 + d").substitute_d(p("2g-2")), p("(2g-2)^2 + 2g - 2"));
  EXPECT_EQ(p("(2g-2)^2 + 2(2g-2)"), p("4g(g-1)"));
  EXPECT_TRUE(p("0g + 7").is_constant());
  EXPECT_EQ(p("g^2 d").degree(), 3u);
  for (const char* bad : {"", "g +", "(g", "g/g", "x", "g^", "1/0"}) {
    EXPECT_THROW(p(bad), PolyParseError) << bad;
  }
}

TEST(DeligneTest, CatalogHolds) {
  ASSERT_EQ(identity_names().size(), 6u);
  for (const auto& name : identity_names()) {
    const IdentityResult r = verify_identity(name);
    EXPECT_TRUE(r.holds) << name << ": " << r.lhs.to_string() << " vs " << r.rhs.to_string();
    EXPECT_FALSE(r.trace.rules.empty()) << name;
  }
  EXPECT_THROW(verify_identity("nope"), std::invalid_argument);
}

TEST(DeligneTest, QuotedCoefficients) {
  const auto lb = verify_identity("lower_bound");
  EXPECT_EQ(lb.lhs.coefficient("<w,w>"), p("12g-4"));
  EXPECT_EQ(lb.lhs.coefficient("Phi"), PolyGD(-8));
  EXPECT_EQ(lb.lhs.terms().size(), 2u);

  const auto iso = verify_identity("iso3_1_pairing");
  EXPECT_EQ(iso.lhs.coefficient("<w,w>"), p("16g(g-1)^3"));

  const auto sub = verify_identity("iso5_1_to_iso3_1");
  EXPECT_EQ(sub.lhs.coefficient("w"), p("4g(g-1)"));
  EXPECT_EQ(sub.lhs.coefficient("w"), p("(2g-2)^2 + 2(2g-2)"));

  const auto big = verify_identity("bigness2_cancel");
  EXPECT_EQ(big.lhs.coefficient("<w,w>"), p("1 + 39(3g-1)(2g-1)/2"));
  EXPECT_EQ(big.lhs.coefficient("lambda"), PolyGD(-12));
}

TEST(DeligneTest, SquareRules) {
  EXPECT_EQ(P3(w1(), w1(), w2()), p("2g-2") * P(omega(), omega()));
  EXPECT_EQ(P3(diagonal(), diagonal(), w1()), -P(omega(), omega()));
  EXPECT_EQ(P3(diagonal(), diagonal(), diagonal()), P(omega(), omega()) - normalize(base("Phi")));
  EXPECT_EQ(normalize(pairing(PushMap::P1, {diagonal(), diagonal()})), -omega());
  EXPECT_EQ(normalize(pairing(PushMap::P1, {diagonal(), pr2(alpha())})), alpha());
}

TEST(DeligneTest, CubePatterns) {
  // unordered patterns of <(w1 + w2)^3>: 111, 112, 122, 222
  const Expr ww = P(omega(), omega());
  EXPECT_TRUE(P3(w1(), w1(), w1()).is_zero());
  EXPECT_EQ(P3(w1(), w1(), w2()), p("2g-2") * ww);
  EXPECT_EQ(P3(w1(), w2(), w2()), p("2g-2") * ww);
  EXPECT_TRUE(P3(w2(), w2(), w2()).is_zero());
  const Expr s = w1() + w2();
  EXPECT_EQ(P3(s, s, s), p("12g-12") * ww);
}

TEST(DeligneTest, SectionAndBaseRules) {
  const Expr xw = normalize(pairing(PushMap::Pi, {section(), omega()}));
  EXPECT_EQ(P(section(), section()), -xw);
  EXPECT_EQ(P(omega(), pi_star(base("lambda"))), p("2g-2") * normalize(base("lambda")));
  EXPECT_EQ(P(alpha(), pi_star(base("E"))), PolyGD::d() * normalize(base("E")));
  EXPECT_EQ(fiber_degree(omega()), p("2g-2"));
  EXPECT_EQ(fiber_degree(alpha() + PolyGD(3) * section()), p("d + 3"));
  EXPECT_EQ(fiber_degree(pr2(omega()) + diagonal()), p("2g-1"));
  EXPECT_EQ(fiber_degree(pr1(omega())), PolyGD(0));
}

TEST(DeligneTest, NormalizeIsIdempotentSymmetricAndLinear) {
  const Expr a = omega() + PolyGD(2) * alpha();
  const Expr b = section() - pi_star(base("lambda"));
  const Expr ab = P(a, b);
  EXPECT_EQ(ab, P(b, a));
  EXPECT_EQ(normalize(ab), ab);
  EXPECT_EQ(P(a + b, b), ab + P(b, b));
  EXPECT_EQ(P(p("g") * a, b), p("g") * ab);
  const Expr t = P3(diagonal(), w1() + w2(), pr2(alpha()));
  EXPECT_EQ(t, P3(pr2(alpha()), diagonal(), w1() + w2()));
}

TEST(DeligneTest, Errors) {
  EXPECT_THROW(base("mu"), UnknownAtomError);
  EXPECT_THROW(slack(""), UnknownAtomError);
  EXPECT_THROW(pairing(PushMap::Pi, {omega()}), ArityError);
  EXPECT_THROW(pairing(PushMap::PiPi, {diagonal(), diagonal()}), ArityError);
  EXPECT_THROW(pairing(PushMap::Pi, {omega(), diagonal()}), ArityError);
  EXPECT_THROW(pi_star(omega()), ArityError);
  EXPECT_THROW(theta_pullback(base("lambda")), ArityError);
  EXPECT_THROW(normalize(theta_pullback(omega())), std::invalid_argument);
  EXPECT_THROW(omega() + base("lambda"), std::invalid_argument);
}

TEST(DeligneTest, HodgeIndexSecondForm) {
  // (g-1) pi_*<i^*Theta, i^*Theta> = g d^4 <w,w> + d^2 i_M^*Theta with M = (2g-2)a - d w
  const Expr i = p("d^2") * omega() + p("2d") * alpha() - pi_star(pairing(PushMap::Pi, {alpha(), alpha()}));
  const Expr m = p("2g-2") * alpha() - PolyGD::d() * omega();
  const Expr lhs = p("g-1") * P(i, i);
  const Expr rhs = normalize(p("g d^4") * P(omega(), omega()) + p("d^2") * theta_pullback(m));
  EXPECT_EQ(lhs, rhs);
}

TEST(DeligneTest, SectionSpecialization) {
  // a -> O(x), d -> 1
  const Expr i = p("d^2") * omega() + p("2d") * alpha() - pi_star(pairing(PushMap::Pi, {alpha(), alpha()}));
  const Expr xw = normalize(pairing(PushMap::Pi, {section(), omega()}));
  const Expr at_x = substitute(i, section(), PolyGD(1));
  EXPECT_EQ(at_x, normalize(omega() + PolyGD(2) * section() + pi_star(xw)));
  EXPECT_EQ(P(at_x, at_x), P(omega(), omega()) + p("4g") * xw);
}

TEST(DeligneTest, SpecializedValues) {
  const auto r = verify_identity("iso5_2_first");
  for (long g = 2; g <= 10; ++g) {
    for (long d = 1; d <= 5; ++d) {
      const auto lhs = r.lhs.evaluate(Rational(g), Rational(d));
      const auto rhs = r.rhs.evaluate(Rational(g), Rational(d));
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(lhs.at("<w,w>"), Rational(d * d * d * d));
    }
  }
}

TEST(DeligneTest, Elimination) {
  const Expr x = base("lambda"), y = base("E"), z = base("Phi");
  const Expr r = eliminate({x - PolyGD(2) * y, y - PolyGD(3) * z}, {"E"});
  EXPECT_EQ(normalize(r), normalize(PolyGD(Rational(1, 2)) * x - PolyGD(3) * z));
  EXPECT_THROW(eliminate({x - PolyGD::g() * y, x + y}, {"W"}), std::invalid_argument);
}

}  // namespace
}  // namespace admlab
