#include <gtest/gtest.h>

#include <vector>

#include "../oracle/reference.hpp"
#include "../test_helpers.hpp"
#include "nlb/errors.hpp"
#include "nlb/polynomial.hpp"

using namespace nlb;
using nlb::testing::P;
using nlb::testing::ring_of;

namespace {

const Ring& free_xy() {
  static const Ring r = ring_of({"x", "y"});
  return r;
}
const Ring& nil_xy() {
  static const Ring r = ring_of({"x", "y"}, {"x^2"});
  return r;
}
const Ring& free3() {
  static const Ring r = ring_of({"x1", "x2", "x3"});
  return r;
}

}  // namespace

TEST(Polynomial, ReduceDeletesDivisibleTerms) {
  EXPECT_EQ(reduce(P(free_xy(), "x^2 + y"), nil_xy()), P(free_xy(), "y"));
  EXPECT_EQ(reduce(P(free_xy(), "x^2 + y"), free_xy()), P(free_xy(), "x^2 + y"));
  EXPECT_EQ(reduce(P(free_xy(), "x^3*y + x*y"), nil_xy()), P(free_xy(), "x*y"));
}

TEST(Polynomial, MultiplyExamples) {
  EXPECT_EQ(multiply(P(free_xy(), "x + 1"), P(free_xy(), "x - 1"), free_xy()), P(free_xy(), "x^2 - 1"));
  EXPECT_TRUE(multiply(P(free_xy(), "x"), P(free_xy(), "x"), nil_xy()).is_zero());
  EXPECT_EQ(multiply(P(free_xy(), "x + y"), P(free_xy(), "x + y"), nil_xy()), P(free_xy(), "2*x*y + y^2"));
}

TEST(Polynomial, DeriveExamples) {
  EXPECT_EQ(derive(P(free_xy(), "x*y^2"), 1), P(free_xy(), "2*x*y"));
  EXPECT_TRUE(derive(P(free_xy(), "y^3"), 0).is_zero());
  EXPECT_EQ(reduce(derive(P(nil_xy(), "x*y"), 1), nil_xy()), P(nil_xy(), "x"));
}

TEST(Polynomial, EvalPointExamples) {
  std::vector<Rational> p1{0, 3, 1}, p2{2, 1, 4};
  EXPECT_EQ(eval_point(P(free3(), "x2^2"), p1, free3()), Rational(9));
  EXPECT_EQ(eval_point(Polynomial(3), p1, free3()), Rational(0));
  EXPECT_EQ(eval_point(P(free3(), "x1*x3 - x2"), p2, free3()), Rational(7));
  std::vector<Rational> short_point{1, 2};
  EXPECT_THROW(eval_point(P(free3(), "x1"), short_point, free3()), StructuralError);
  std::vector<Rational> xy{1, 2};
  EXPECT_THROW(eval_point(P(nil_xy(), "y"), xy, nil_xy()), UnsupportedError);
}

TEST(Polynomial, RandomPolyBoundsAndDeterminism) {
  EXPECT_TRUE(random_poly(free3(), 0, 5, 42).is_constant());
  EXPECT_EQ(random_poly(free3(), 3, 4, 99), random_poly(free3(), 3, 4, 99));
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Polynomial p = random_poly(free3(), 2, 3, s);
    EXPECT_LE(p.degree(), 2u);
    for (const auto& t : p.terms()) {
      EXPECT_LE(t.coeff, Rational(3));
      EXPECT_GE(t.coeff, Rational(-3));
    }
  }
}

TEST(Polynomial, StrRendering) {
  EXPECT_EQ(P(free3(), "2*x1^2*x2 - 1/2*x3 + 1").str(free3()), "2*x1^2*x2 - 1/2*x3 + 1");
  EXPECT_EQ(Polynomial(3).str(free3()), "0");
}

TEST(Polynomial, StandardMonomialOrder) {
  auto ms = standard_monomials(free3(), 2);
  ASSERT_EQ(ms.size(), 10u);
  std::vector<std::string> names;
  for (const auto& m : ms) names.push_back(Polynomial::term(m, 1).str(free3()));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "x1", "x2", "x3", "x1^2", "x1*x2", "x1*x3", "x2^2",
                                             "x2*x3", "x3^2"}));
  EXPECT_EQ(standard_monomials(nil_xy(), 2).size(), 5u);  // x^2 excluded
}

class RingAxioms : public ::testing::TestWithParam<bool> {};

TEST_P(RingAxioms, HoldOnRandomSamples) {
  const Ring& r = GetParam() ? nil_xy() : free3();
  for (std::uint64_t s = 0; s < 150; ++s) {
    Polynomial a = random_poly(r, 3, 5, 3 * s), b = random_poly(r, 3, 5, 3 * s + 1),
               c = random_poly(r, 2, 5, 3 * s + 2);
    EXPECT_EQ(multiply(a, b, r), multiply(b, a, r));
    EXPECT_EQ(multiply(multiply(a, b, r), c, r), multiply(a, multiply(b, c, r), r));
    EXPECT_EQ(multiply(a, b + c, r), multiply(a, b, r) + multiply(a, c, r));
    Ring plain(r.variables());
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      EXPECT_EQ(derive(multiply(a, b, plain), v),
                multiply(derive(a, v), b, plain) + multiply(a, derive(b, v), plain));
    }
    // reduce is idempotent and a ring morphism from the free ring
    EXPECT_EQ(reduce(reduce(a, r), r), reduce(a, r));
    EXPECT_EQ(reduce(multiply(a, b, plain), r), multiply(reduce(a, r), reduce(b, r), r));
  }
}

INSTANTIATE_TEST_SUITE_P(FreeAndQuotient, RingAxioms, ::testing::Bool());

TEST(Polynomial, MultiplyMatchesReference) {
  for (const Ring* r : {&free3(), &nil_xy()}) {
    auto gens = oracle::gens_of(*r);
    for (std::uint64_t s = 0; s < 200; ++s) {
      Polynomial a = random_poly(*r, 3, 9, 7 * s), b = random_poly(*r, 3, 9, 7 * s + 5);
      EXPECT_EQ(oracle::from(multiply(a, b, *r)), oracle::mul(oracle::from(a), oracle::from(b), gens));
      EXPECT_EQ(oracle::from(derive(a, 1)), oracle::deriv(oracle::from(a), 1));
    }
  }
}

TEST(Polynomial, PowerMatchesRepeatedProduct) {
  Polynomial p = P(free_xy(), "x + 2*y - 1");
  Polynomial acc = Polynomial::constant(2, 1);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(power(p, k, free_xy()), acc);
    acc = multiply(acc, p, free_xy());
  }
  EXPECT_TRUE(power(P(nil_xy(), "x*y"), 2, nil_xy()).is_zero());
}
