#include <gtest/gtest.h>

#include <vector>

#include "../test_helpers.hpp"
#include "nlb/campaign.hpp"
#include "nlb/hamgeo.hpp"
#include "nlb/multibracket.hpp"

using namespace nlb;
using nlb::testing::catalog_tensor;
using nlb::testing::P;

namespace {

VectorField field(const Ring& r, std::vector<std::string> comps) {
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(P(r, c));
  return VectorField(r, std::move(ps));
}

}  // namespace

TEST(HamiltonianField, Examples) {
  auto t = catalog_tensor("example1");
  const Ring& r = t.ring();
  std::vector<Polynomial> x1{P(r, "x1")}, x2{P(r, "x2")}, one{P(r, "4")};
  EXPECT_EQ(hamiltonian_field(t, x1), field(r, {"x2", "0", "x3"}));
  EXPECT_TRUE(hamiltonian_field(t, x2).is_zero());
  EXPECT_TRUE(hamiltonian_field(t, one).is_zero());

  auto nambu = catalog_tensor("nambu3");
  std::vector<Polynomial> pair{P(nambu.ring(), "x1"), P(nambu.ring(), "7")};
  EXPECT_TRUE(hamiltonian_field(nambu, pair).is_zero());
}

TEST(HamiltonianField, AppliesAsBracket) {
  for (const char* name : {"example1", "nambu3", "nilpotent-remark"}) {
    auto t = catalog_tensor(name);
    for (std::uint64_t s = 0; s < 20; ++s) {
      std::vector<Polynomial> args;
      for (std::size_t i = 0; i < t.arity(); ++i) args.push_back(random_poly(t.ring(), 3, 3, 17 * s + i));
      std::span<const Polynomial> fs(args.data(), t.arity() - 1);
      EXPECT_EQ(reduce(hamiltonian_field(t, fs).apply(args.back()), t.ring()), bracket_eval(t, args));
    }
  }
}

TEST(LieDerivative, Examples) {
  auto t = catalog_tensor("example1");
  const Ring& r = t.ring();
  EXPECT_TRUE(lie_derivative(t, VectorField(r)).is_zero());
  EXPECT_TRUE(lie_derivative(t, field(r, {"x2", "0", "x3"})).is_zero());
  auto nambu = catalog_tensor("nambu3");
  EXPECT_TRUE(lie_derivative(nambu, field(nambu.ring(), {"1", "-2", "1/3"})).is_zero());
}

// L_X T is linear in X and in T.
TEST(LieDerivative, Linearity) {
  Ring r({"x1", "x2", "x3"});
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = random_tensor(r, 2, 2, s), u = random_tensor(r, 2, 1, s + 50);
    std::vector<Polynomial> a, b, sum;
    for (std::size_t j = 0; j < 3; ++j) {
      a.push_back(random_poly(r, 2, 3, 10 * s + j));
      b.push_back(random_poly(r, 2, 3, 10 * s + j + 5));
      sum.push_back(a.back() + b.back());
    }
    VectorField xa(r, a), xb(r, b), xs(r, sum);
    EXPECT_EQ(lie_derivative(t, xs), lie_derivative(t, xa) + lie_derivative(t, xb));
    EXPECT_EQ(lie_derivative(t + u, xa), lie_derivative(t, xa) + lie_derivative(u, xa));
  }
}

// (L_X T)(f, g) = X{f,g} - {Xf, g} - {f, Xg} for arity 2.
TEST(LieDerivative, DerivationFormula) {
  Ring r({"x1", "x2", "x3"});
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto t = random_tensor(r, 2, 2, 900 + s);
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < 3; ++j) comps.push_back(random_poly(r, 2, 3, 60 * s + j));
    VectorField x(r, comps);
    Polynomial f = random_poly(r, 3, 3, 60 * s + 10), g = random_poly(r, 3, 3, 60 * s + 11);
    std::vector<Polynomial> fg{f, g}, xf_g{x.apply(f), g}, f_xg{f, x.apply(g)};
    Polynomial expected = x.apply(bracket_eval(t, fg)) - bracket_eval(t, xf_g) - bracket_eval(t, f_xg);
    EXPECT_EQ(bracket_eval(lie_derivative(t, x), fg), expected);
  }
}

TEST(Preservation, Verdicts) {
  EXPECT_TRUE(preservation_check(catalog_tensor("so3")).passed);
  EXPECT_TRUE(preservation_check(BracketTensor(Ring({"x", "y"}), 2)).passed);

  auto e1 = catalog_tensor("example1");
  auto v = preservation_check(e1);
  ASSERT_FALSE(v.passed);
  EXPECT_EQ(v.witness->inputs.at(0).degree(), 2u);
  EXPECT_TRUE(linear_preservation_check(e1).passed);
  EXPECT_TRUE(linear_preservation_check(catalog_tensor("so3")).passed);
}

TEST(Preservation, FlippedSignBreaksLinearPreservation) {
  auto t = catalog_tensor("example1");
  t.set({2, 0}, P(t.ring(), "x3"));
  std::vector<Polynomial> x3{P(t.ring(), "x3")};
  EXPECT_FALSE(lie_derivative(t, hamiltonian_field(t, x3)).is_zero());
  EXPECT_FALSE(linear_preservation_check(t).passed);
}

TEST(Preservation, AgreesWithFilippov) {
  for (const auto& name : catalog_names()) {
    auto spec = catalog(name);
    if (!spec.tensor) continue;
    EXPECT_EQ(fi_check(*spec.tensor).passed, preservation_check(*spec.tensor).passed) << name;
  }
  Ring r({"x1", "x2", "x3"});
  for (std::uint64_t s = 0; s < 12; ++s) {
    auto t = random_tensor(r, 2, s % 2, 4000 + s);
    for (const auto& cand : {t, skew_part(t)})
      EXPECT_EQ(fi_check(cand).passed, preservation_check(cand).passed) << s;
  }
}
