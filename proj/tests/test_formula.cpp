#include <random>

#include <gtest/gtest.h>

#include "hyalba/errors.hpp"
#include "hyalba/formula.hpp"
#include "hyalba/generator.hpp"
#include "hyalba/syntax.hpp"

using namespace hyalba;

namespace {

// Second, independent substitution used as the reference.
Formula subst_ref(const Formula& f, const Symbol& p, const Formula& theta) {
  if (f.op() == Connective::PropVar) return f.symbol() == p ? theta : f;
  if (f.is_atom()) return f;
  std::vector<Formula> kids;
  for (const auto& k : f.children()) kids.push_back(subst_ref(k, p, theta));
  return f.with_children(kids);
}

}  // namespace

TEST(Substitute, BoxTRun) {
  EXPECT_EQ(substitute_prop(parse("[]p -> p"), Symbol::prop("p"), parse("~'i1")), parse("[]~'i1 -> ~'i1"));
}

TEST(Substitute, Identity) {
  Formula f = parse("!x. <>(x & p) -> @'i []p");
  EXPECT_EQ(substitute_prop(f, Symbol::prop("p"), parse("p")), f);
}

TEST(Substitute, CaptureRejected) {
  EXPECT_THROW(substitute_prop(parse("!x. @x p"), Symbol::prop("p"), parse("<>x")), CaptureError);
  EXPECT_NO_THROW(substitute_prop(parse("!x. @x p"), Symbol::prop("p"), parse("<>y")));
}

TEST(Substitute, AgreesWithReferenceOnRandomFormulas) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    Formula f = random_formula(rng, 5, 3, 2, true);
    Formula theta = random_formula(rng, 3, 2, 2, true);
    ASSERT_EQ(substitute_prop(f, Symbol::prop("p1"), theta), subst_ref(f, Symbol::prop("p1"), theta));
  }
}

TEST(ReplaceStateVar, Examples) {
  auto x = Symbol::state("x");
  auto i = Symbol::nominal("i");
  EXPECT_EQ(replace_state_var(parse("@x <>x"), x, i), parse("@'i <>'i"));
  EXPECT_EQ(replace_state_var(parse("!x.<>x"), x, i), parse("!x.<>x"));
  EXPECT_EQ(replace_state_var(parse("<>x & !x.x"), x, i), parse("<>'i & !x.x"));
}

TEST(ReplaceStateVar, IdempotentForNominals) {
  std::mt19937_64 rng(5);
  auto x = Symbol::state("x");
  auto i = Symbol::nominal("n1");
  for (int k = 0; k < 500; ++k) {
    Formula f = random_formula(rng, 5, 2, 2, false);
    Formula once = replace_state_var(f, x, i);
    ASSERT_EQ(replace_state_var(once, x, i), once);
  }
}

TEST(ReplaceStateVar, StateVariableCaptureRejected) {
  EXPECT_THROW(replace_state_var(parse("!y. <>x"), Symbol::state("x"), Symbol::state("y")), CaptureError);
}

TEST(Polarity, Examples) {
  auto p = Symbol::prop("p");
  EXPECT_EQ(polarity(parse("[]p -> p"), p), Polarity::Both);
  EXPECT_EQ(polarity(parse("<>p"), p), Polarity::Positive);
  EXPECT_EQ(polarity(parse("~p"), p), Polarity::Negative);
  EXPECT_EQ(polarity(parse("q"), p), Polarity::Absent);
  EXPECT_EQ(polarity(parse("(p -> q) -> r"), p), Polarity::Positive);
}

TEST(Queries, Examples) {
  EXPECT_TRUE(is_pure(parse("@'i <>'j")));
  EXPECT_FALSE(is_pure(parse("<>p1 & p2")));
  EXPECT_EQ(free_state_vars(parse("!x.<>y")), std::vector<Symbol>{Symbol::state("y")});
  EXPECT_TRUE(is_sentence(parse("!x. <>x")));
  EXPECT_FALSE(is_sentence(parse("@x p")));
  EXPECT_EQ(props(parse("q & <>p | q")), (std::vector<Symbol>{Symbol::prop("q"), Symbol::prop("p")}));
  EXPECT_EQ(parse("[]<>p").depth(), 2U);
}

TEST(Fresh, Scheme) {
  FreshContext ctx;
  EXPECT_EQ(to_string(ctx.fresh(SymbolKind::Nominal)), "'i0");
  EXPECT_EQ(to_string(ctx.fresh(SymbolKind::Nominal)), "'i1");
  auto j = ctx.fresh(SymbolKind::Nominal);
  EXPECT_EQ(to_string(j), "'j1");
  EXPECT_TRUE(j.is_machine());
  EXPECT_EQ(to_string(ctx.fresh(SymbolKind::StateVar)), "x1");
}

TEST(Fresh, SkipsUserNames) {
  FreshContext ctx;
  ctx.observe(parse("@'j1 'i0 & p"));
  auto a = ctx.fresh(SymbolKind::Nominal);
  auto b = ctx.fresh(SymbolKind::Nominal);
  auto c = ctx.fresh(SymbolKind::Nominal);
  EXPECT_NE(a.name, "i0");
  EXPECT_NE(c.name, "j1");
  EXPECT_NE(a, b);
  EXPECT_NE(b, c);
  for (const auto& s : {a, b, c}) {
    EXPECT_TRUE(s.is_machine());
    EXPECT_TRUE(ctx.contains(s));
  }
}
