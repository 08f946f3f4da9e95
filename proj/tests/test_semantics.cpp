#include <random>

#include <gtest/gtest.h>

#include "hyalba/errors.hpp"
#include "hyalba/frames.hpp"
#include "hyalba/generator.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "support/oracle.hpp"

using namespace hyalba;

namespace {

Signature sig_with_var(const Formula& f) {
  Signature s = signature_of(f);
  s.merge(Signature{{}, {}, {Symbol::state("x"), Symbol::state("y")}});
  return s;
}

}  // namespace

TEST(Eval, ReflexiveBinderLoop) {
  KripkeModel m(KripkeFrame(1, {{0, 0}}));
  EXPECT_TRUE(eval(m, {}, 0, parse("!x.<>x")));
  KripkeModel bare{KripkeFrame(1)};
  EXPECT_FALSE(eval(bare, {}, 0, parse("!x.<>x")));
}

TEST(Eval, Constants) {
  KripkeModel m(KripkeFrame(3, {{0, 1}}));
  for (World w = 0; w < 3; ++w) {
    EXPECT_TRUE(eval(m, {}, w, parse("T")));
    EXPECT_FALSE(eval(m, {}, w, parse("F")));
  }
}

TEST(Eval, RefInstance) {
  KripkeModel m(KripkeFrame(2));
  m.set_nominal(Symbol::nominal("i"), 1);
  EXPECT_TRUE(eval(m, {}, 0, parse("@'i 'i")));
}

TEST(Eval, AgreesWithOracle) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 2000; ++k) {
    Formula f = random_formula(rng, 5, 3, 2, false);
    ModelInstance mi = random_model(rng, sig_with_var(f), 3);
    oracle::Model om = oracle::from_library(mi);
    for (World w = 0; w < mi.model.frame().size(); ++w) {
      ASSERT_EQ(eval(mi.model, mi.assignment, w, f), oracle::sat(om, static_cast<int>(w), f))
          << print(f) << " in " << format_model(mi.model, mi.assignment) << " at " << w;
    }
  }
}

TEST(Eval, BinderMatchesNominalReplacement) {
  std::mt19937_64 rng(17);
  auto x = Symbol::state("x");
  auto fresh = Symbol::nominal("fresh");
  for (int k = 0; k < 500; ++k) {
    Formula body = random_formula(rng, 4, 2, 1, false);
    ModelInstance mi = random_model(rng, sig_with_var(body), 3);
    for (World w = 0; w < mi.model.frame().size(); ++w) {
      KripkeModel named = mi.model;
      named.set_nominal(fresh, w);
      ASSERT_EQ(eval(mi.model, mi.assignment, w, Formula::binder(x, body)),
                eval(named, mi.assignment, w, replace_state_var(body, x, fresh)));
    }
  }
}

TEST(Inequality, Basics) {
  KripkeModel m(KripkeFrame(2, {{0, 1}}));
  m.set_prop(Symbol::prop("p"), 0);
  m.set_prop(Symbol::prop("q"), 0b10);
  Formula phi = parse("<>q | p");
  EXPECT_TRUE(holds_inequality(m, {}, Inequality{phi, phi}));
  EXPECT_TRUE(holds_inequality(m, {}, parse_inequality("p <= F")));
}

TEST(Inequality, MatchesImplicationEverywhere) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    Formula a = random_formula(rng, 4, 2, 2, false);
    Formula b = random_formula(rng, 4, 2, 2, false);
    Signature s = sig_with_var(a);
    s.merge(signature_of(b));
    ModelInstance mi = random_model(rng, s, 3);
    ASSERT_EQ(holds_inequality(mi.model, mi.assignment, Inequality{a, b}),
              globally_true(mi.model, mi.assignment, Formula::implication(a, b)));
    ASSERT_EQ(holds_inequality(mi.model, mi.assignment, Inequality{a, b}),
              oracle::holds(oracle::from_library(mi), Inequality{a, b}));
  }
}

TEST(Frames, Counts) {
  EXPECT_EQ(enumerate_frames(1).size(), 2U);
  EXPECT_EQ(enumerate_frames(2).size(), 18U);
  EXPECT_EQ(enumerate_frames(3).size(), 530U);
}

TEST(Frames, OrderedBySizeThenMask) {
  auto fs = enumerate_frames(2);
  for (std::size_t k = 1; k < fs.size(); ++k) {
    bool ordered = fs[k - 1].size() < fs[k].size() ||
                   (fs[k - 1].size() == fs[k].size() && fs[k - 1].relation_bits() < fs[k].relation_bits());
    EXPECT_TRUE(ordered);
  }
}

TEST(FrameValid, Examples) {
  Formula t = parse("[]p -> p");
  EXPECT_TRUE(frame_valid(KripkeFrame(1, {{0, 0}}), t));
  EXPECT_FALSE(frame_valid(KripkeFrame(1), t));
  for (const auto& fr : enumerate_frames(3)) EXPECT_TRUE(frame_valid(fr, parse("@'i 'i")));
}

TEST(FrameValid, AgreesWithOracle) {
  std::mt19937_64 rng(31);
  auto frames = enumerate_frames(3);
  for (int k = 0; k < 60; ++k) {
    Formula f = random_formula(rng, 4, 2, 1, k % 3 != 0);
    for (std::size_t n = k % 7; n < frames.size(); n += 7) {
      ASSERT_EQ(frame_valid(frames[n], f), oracle::frame_valid(oracle::from_library(frames[n]), f))
          << print(f) << " on " << format_frame(frames[n]);
    }
  }
}

TEST(FrameValidQuasi, Examples) {
  std::vector<QuasiInequality> qs{parse_quasi("'i0 <= []~'i1 => 'i0 <= ~'i1")};
  EXPECT_TRUE(frame_valid_quasi_set(KripkeFrame(2, {{0, 0}, {1, 1}}), qs));
  EXPECT_FALSE(frame_valid_quasi_set(KripkeFrame(1), qs));
  EXPECT_TRUE(frame_valid_quasi_set(KripkeFrame(1), {}));
}

TEST(FrameValidQuasi, AgreesWithOracle) {
  const std::vector<std::string> texts{
      "'i0 <= <>'j1 ; 'j1 <= <>'j2 ; <>'j2 <= ~'i1 => 'i0 <= ~'i1",
      "[]<>'i0 <= ~'i1 => 'i0 <= ~'i1",
      "'i0 <= <>[]~'i1 => 'i0 <= ~'i1",
      "'i0 <= <>'j1 ; 'j1 <= ~'i1 ; 'j1 <= <>'j1 => 'i0 <= ~'i1",
      "[]!x. <>(x & 'i0) <= ~'i1 => 'i0 <= ~'i1",
      "x <= <>'i ; 'i <= ~x => 'i <= ~'j",
  };
  for (const auto& t : texts) {
    std::vector<QuasiInequality> qs{parse_quasi(t)};
    for (const auto& fr : enumerate_frames(3)) {
      ASSERT_EQ(frame_valid_quasi_set(fr, qs), oracle::frame_valid(oracle::from_library(fr), qs))
          << t << " on " << format_frame(fr);
    }
  }
}

TEST(Limits, TooManyWorldsOrSymbols) {
  EnumerationLimits lim;
  EXPECT_THROW(enumerate_frames(4, lim), ResourceLimitError);
  lim.max_props = 1;
  EXPECT_THROW(frame_valid(KripkeFrame(1), parse("p & q"), lim), ResourceLimitError);
  EnumerationLimits tight;
  tight.max_evaluations = 3;
  EXPECT_THROW(frame_valid(KripkeFrame(2), parse("p | q"), tight), ResourceLimitError);
}

TEST(TextFormat, RoundTrip) {
  KripkeFrame f(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(format_frame(f), "worlds=3; rel={(0,1),(1,2)}");
  EXPECT_EQ(parse_frame(format_frame(f)), f);
  ModelInstance mi = parse_model("worlds=3; rel={(0,1),(1,2)}; 'i=0; p={0,2}; x=1");
  EXPECT_EQ(mi.model.nominal(Symbol::nominal("i")), 0U);
  EXPECT_EQ(mi.model.prop(Symbol::prop("p")), WorldMask{0b101});
  EXPECT_EQ(mi.assignment.at(Symbol::state("x")), 1U);
  EXPECT_EQ(format_model(mi.model, mi.assignment), "worlds=3; rel={(0,1),(1,2)}; 'i=0; p={0,2}; x=1");
}

TEST(FrameClass, Names) {
  auto frames = enumerate_frames(3);
  std::vector<bool> refl;
  for (const auto& f : frames) refl.push_back(oracle::reflexive(oracle::from_library(f)));
  EXPECT_EQ(describe_frame_class(frames, refl), "reflexive");
  std::vector<bool> all(frames.size(), true);
  EXPECT_EQ(describe_frame_class(frames, all), "all");
  EXPECT_TRUE(frame_in_class(KripkeFrame(1, {{0, 0}}), "reflexive+transitive"));
  EXPECT_FALSE(frame_in_class(KripkeFrame(1), "reflexive"));
}
