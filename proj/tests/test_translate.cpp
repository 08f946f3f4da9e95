#include <gtest/gtest.h>

#include "hyalba/errors.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "hyalba/translate.hpp"
#include "support/oracle.hpp"

using namespace hyalba;

TEST(TrIneq, Clauses) {
  EXPECT_EQ(print(tr_ineq(parse_inequality("'i0 <= []~'i1"))), "@'i0 []~'i1");
  EXPECT_EQ(print(tr_ineq(parse_inequality("<>'k1 <= ~'i1"))), "~@'i1 <>'k1");
  EXPECT_EQ(print(tr_ineq(parse_inequality("x <= <>'i"))), "@x <>'i");
  EXPECT_EQ(print(tr_ineq(parse_inequality("<>'i <= ~y"))), "~@y <>'i");
  EXPECT_EQ(tr_clause(parse_inequality("'i <= ~'j")), TrClause::AtNominal);
  EXPECT_EQ(print(tr_ineq(parse_inequality("'i <= ~'j"))), "@'i ~'j");
  EXPECT_EQ(print(tr_ineq(parse_inequality("F <= ~'i"))), "~@'i F");
  EXPECT_THROW(tr_ineq(parse_inequality("<>'i <= []'j")), ShapeError);
}

TEST(TrQuasi, Examples) {
  EXPECT_EQ(print(tr_quasi(parse_quasi("'i0 <= []~'i1 => 'i0 <= ~'i1"))), "@'i0 []~'i1 -> ~@'i0 'i1");
  EXPECT_EQ(print(tr_quasi(parse_quasi("=> 'i0 <= ~'i1"))), "T -> ~@'i0 'i1");
  EXPECT_EQ(print(tr_quasi(parse_quasi("'i0 <= <>'j1 ; 'j1 <= <>'k1 ; <>'k1 <= ~'i1 => 'i0 <= ~'i1"))),
            "@'i0 <>'j1 & @'j1 <>'k1 & ~@'i1 <>'k1 -> ~@'i0 'i1");
}

TEST(TrQuasiSet, Conjunction) {
  auto a = parse_quasi("'i0 <= []~'i1 => 'i0 <= ~'i1");
  auto b = parse_quasi("=> 'i0 <= ~'i1");
  EXPECT_EQ(tr_quasiset({}), Formula::top());
  EXPECT_EQ(tr_quasiset({a}), tr_quasi(a));
  EXPECT_EQ(tr_quasiset({a, b}), Formula::conjunction(tr_quasi(a), tr_quasi(b)));
}

TEST(TrEquivalence, ExhaustiveSmall) {
  EXPECT_TRUE(verify_tr_equivalence(parse_inequality("'i <= <>'j"), 2).ok());
  EXPECT_TRUE(verify_tr_equivalence(parse_inequality("F <= ~'i"), 3).ok());
  // Both readings of 'i <= ~'j agree.
  auto r = verify_tr_equivalence(parse_inequality("'i <= ~'j"), 3);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0U);
}

TEST(TrEquivalence, OracleAgreesOnQuasi) {
  auto q = parse_quasi("'i0 <= <>'j1 ; 'j1 <= <>'j2 ; <>'j2 <= ~'i1 => 'i0 <= ~'i1");
  Formula tr = tr_quasi(q);
  std::size_t n = 0;
  for (const auto& fr : oracle::frames(2)) {
    oracle::for_each_model(fr, oracle::collect({q}), [&](const oracle::Model& m) {
      EXPECT_EQ(oracle::holds(m, q), oracle::everywhere(m, tr));
      ++n;
      return true;
    });
  }
  EXPECT_GT(n, 100U);
  EXPECT_TRUE(verify_tr_equivalence_sampled({q}, 500, 3, 9).ok());
}
