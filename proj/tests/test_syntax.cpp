#include <random>

#include <gtest/gtest.h>

#include "hyalba/errors.hpp"
#include "hyalba/formula.hpp"
#include "hyalba/generator.hpp"
#include "hyalba/json_io.hpp"
#include "hyalba/syntax.hpp"

using namespace hyalba;

namespace {

Formula P(const char* n) { return Formula::prop(Symbol::prop(n)); }
Formula X(const char* n) { return Formula::state(Symbol::state(n)); }
Formula I(const char* n) { return Formula::nominal(Symbol::nominal(n)); }

}  // namespace

TEST(Parse, DiamondConjunction) {
  EXPECT_EQ(parse("<>p1 & p2"), Formula::conjunction(Formula::diamond(P("p1")), P("p2")));
}

TEST(Parse, Constants) {
  EXPECT_EQ(parse("T"), Formula::top());
  EXPECT_EQ(parse("F"), Formula::bottom());
}

TEST(Parse, BinderOverAtStateVar) {
  auto x = Symbol::state("x");
  EXPECT_EQ(parse("!x. @x <>x"), Formula::binder(x, Formula::at(x, Formula::diamond(X("x")))));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("p | q & r"), Formula::disjunction(P("p"), Formula::conjunction(P("q"), P("r"))));
  EXPECT_EQ(parse("p -> q -> r"), Formula::implication(P("p"), Formula::implication(P("q"), P("r"))));
  EXPECT_EQ(parse("~p & q"), Formula::conjunction(Formula::negation(P("p")), P("q")));
  EXPECT_EQ(parse("@'i p & q"), Formula::conjunction(Formula::at(Symbol::nominal("i"), P("p")), P("q")));
  EXPECT_EQ(parse("[]p -> p"), Formula::implication(Formula::box(P("p")), P("p")));
}

TEST(Parse, BiconditionalIsSugar) {
  EXPECT_EQ(parse("p <-> q"),
            Formula::conjunction(Formula::implication(P("p"), P("q")), Formula::implication(P("q"), P("p"))));
}

TEST(Parse, IdentifierKinds) {
  EXPECT_EQ(parse("x").op(), Connective::StateVar);
  EXPECT_EQ(parse("y2").op(), Connective::StateVar);
  EXPECT_EQ(parse("q").op(), Connective::PropVar);
  EXPECT_EQ(parse("'j").op(), Connective::Nominal);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("p &"), ParseError);
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("!'i. p"), KindError);
  EXPECT_THROW(parse("@p q"), KindError);
  try {
    parse("p & & q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
}

TEST(Print, Examples) {
  EXPECT_EQ(print(Formula::conjunction(Formula::diamond(P("p1")), P("p2"))), "<>p1 & p2");
  EXPECT_EQ(print(Formula::binder(Symbol::state("x"), Formula::diamond(X("x")))), "!x. <>x");
  EXPECT_EQ(print(Formula::implication(Formula::box(P("p")), P("p"))), "[]p -> p");
  EXPECT_EQ(print(Formula::at(Symbol::nominal("i"), I("j"))), "@'i 'j");
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print(parse("(p & q) | r")), "p & q | r");
  EXPECT_EQ(print(parse("(p | q) & r")), "(p | q) & r");
  EXPECT_EQ(print(parse("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(print(parse("<>(p & q)")), "<>(p & q)");
}

TEST(Parse, InequalityAndQuasi) {
  auto q = parse_quasi("'i0 <= <>'j1 ; <>'j1 <= ~'i1 => 'i0 <= ~'i1");
  ASSERT_EQ(q.antecedents.size(), 2U);
  EXPECT_EQ(q.conclusion.lhs, I("i0"));
  EXPECT_EQ(print(q), "'i0 <= <>'j1 ; <>'j1 <= ~'i1 => 'i0 <= ~'i1");
  EXPECT_EQ(parse_quasi("=> 'i <= ~'j").antecedents.size(), 0U);
  EXPECT_EQ(print(parse_inequality("[]p <= p")), "[]p <= p");
}

TEST(RoundTrip, RandomFormulasPrintParse) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    Formula f = random_formula(rng, 6, 3, 2, k % 2 == 0);
    ASSERT_EQ(parse(print(f)), f) << print(f);
  }
}

TEST(RoundTrip, RandomFormulasJson) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Formula f = random_formula(rng, 5, 3, 2, false);
    ASSERT_EQ(formula_from_json(to_json(f)), f) << print(f);
  }
}

TEST(RoundTrip, QuasiJsonKeepsMachineIndices) {
  QuasiInequality q{{Inequality{Formula::nominal(Symbol{SymbolKind::Nominal, "j", 3}), Formula::diamond(I("i"))}},
                    Inequality{I("i"), Formula::negation(I("k"))}};
  EXPECT_EQ(quasi_from_json(to_json(q)), q);
}
