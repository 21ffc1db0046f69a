#include <gtest/gtest.h>

#include <string>

#include "nlb/campaign.hpp"
#include "nlb/catalog.hpp"
#include "nlb/errors.hpp"
#include "nlb/format.hpp"

using namespace nlb;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Format, ExampleOneFile) {
  auto spec = parse_spec(R"(
ring { vars: x1, x2, x3; }   # commas allowed
tensor {
  arity: 2;
  coeff 1 1 : x2;
  coeff 1 3 : x3;
  coeff 3 1 : -x3;
}
)");
  ASSERT_TRUE(spec.tensor);
  EXPECT_EQ(spec.tensor->coefficients().size(), 3u);
  EXPECT_EQ(spec, catalog("example1"));
}

TEST(Format, EmptyTensorBlock) {
  auto spec = parse_spec("ring { vars: x y; }\ntensor { arity: 3; }\n");
  ASSERT_TRUE(spec.tensor);
  EXPECT_TRUE(spec.tensor->is_zero());
  EXPECT_EQ(spec.tensor->arity(), 3u);
}

TEST(Format, IndexRangeError) {
  auto e = parse_failure("ring { vars: x1 x2 x3; }\ntensor {\n  arity: 2;\n  coeff 1 4: x1;\n}\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
}

TEST(Format, ErrorsCarryPositions) {
  auto undeclared = parse_failure("ring { vars: x; }\ntensor { arity: 2; coeff 1 1 : z; }");
  EXPECT_EQ(undeclared.line(), 2u);
  EXPECT_GT(undeclared.column(), 1u);

  auto dup = parse_failure("ring { vars: x; }\ntensor { arity: 2;\ncoeff 1 1 : x;\ncoeff 1 1 : 1; }");
  EXPECT_EQ(dup.line(), 4u);

  EXPECT_EQ(parse_failure("ring { vars: x; } ring { vars: y; }").line(), 1u);
  EXPECT_EQ(parse_failure("tensor { arity: 2; }").line(), 1u);
  EXPECT_EQ(parse_failure("ring { vars: x; }\ntensor { arity: 1; }").line(), 2u);
  EXPECT_EQ(parse_failure("ring { vars: x x; }").line(), 1u);
  EXPECT_EQ(parse_failure("ring { vars: x; }\n\n  tensor { arity: 2; coeff 1 1 : x +; }").line(), 3u);
  // algebroid base variables must be free ring variables
  parse_failure("ring { vars: t; nilpotent: t^2; }\nalgebroid { base_vars: t; rank: 1; }");
  parse_failure("ring { vars: t; }\nalgebroid { base_vars: s; rank: 1; }");
}

TEST(Format, ParsesNilpotentsAndRationals) {
  auto spec = parse_spec("ring { vars: x y; nilpotent: x^2, x*y^3; }\ntensor { arity: 2; coeff 2 2 : 3/4*x*y - 1/2; }");
  EXPECT_EQ(spec.ring.nilpotent_generators().size(), 2u);
  EXPECT_EQ(spec.tensor->at({1, 1}).str(spec.ring), "3/4*x*y - 1/2");
}

TEST(Format, CatalogRoundTrip) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"example1", "nilpotent-remark", "so3", "nambu3",
                                                       "tangent-algebroid", "example1-algebroid"}));
  for (const auto& name : catalog_names()) {
    auto spec = catalog(name);
    std::string text = print_spec(spec);
    EXPECT_EQ(parse_spec(text), spec) << name;
    EXPECT_EQ(print_spec(parse_spec(text)), text) << name;
  }
  EXPECT_THROW(catalog("nope"), UsageError);
}

TEST(Format, CatalogContents) {
  auto e1 = *catalog("example1").tensor;
  const Ring& r = e1.ring();
  EXPECT_EQ(e1.at({0, 0}), parse_polynomial("x2", r));
  EXPECT_EQ(e1.at({0, 2}), parse_polynomial("x3", r));
  EXPECT_EQ(e1.at({2, 0}), parse_polynomial("-x3", r));
}

TEST(Format, RandomTensorsRoundTrip) {
  Ring r({"a", "b", "c"});
  for (std::uint64_t s = 0; s < 30; ++s) {
    SpecFile spec{r, random_tensor(r, 2 + s % 3, 2, s), std::nullopt};
    EXPECT_EQ(parse_spec(print_spec(spec)), spec);
  }
}
