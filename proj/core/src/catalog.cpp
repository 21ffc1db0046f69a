#include "nlb/catalog.hpp"

#include <array>
#include <utility>

#include "nlb/errors.hpp"

namespace nlb {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kEntries{{
    {"example1", R"(# Non-skew linear 2-tensor whose bracket satisfies Jacobi on linear functions.
ring { vars: x1 x2 x3; }
tensor {
  arity: 2;
  coeff 1 1 : x2;
  coeff 1 3 : x3;
  coeff 3 1 : -x3;
}
)"},
    {"nilpotent-remark", R"(# Symmetric bracket {f,g} = x f_y g_y on Q[x,y]/<x^2>.
ring { vars: x y; nilpotent: x^2; }
tensor {
  arity: 2;
  coeff 2 2 : x;
}
)"},
    {"so3", R"(# Linear Poisson structure of so(3): {x_i, x_j} = eps_ijk x_k.
ring { vars: x1 x2 x3; }
tensor {
  arity: 2;
  coeff 1 2 : x3;
  coeff 2 1 : -x3;
  coeff 2 3 : x1;
  coeff 3 2 : -x1;
  coeff 3 1 : x2;
  coeff 1 3 : -x2;
}
)"},
    {"nambu3", R"(# Constant Nambu bracket {x1, x2, x3} = 1 (Jacobian determinant).
ring { vars: x1 x2 x3; }
tensor {
  arity: 3;
  coeff 1 2 3 : 1;
  coeff 2 3 1 : 1;
  coeff 3 1 2 : 1;
  coeff 2 1 3 : -1;
  coeff 1 3 2 : -1;
  coeff 3 2 1 : -1;
}
)"},
    {"tangent-algebroid", R"(# Tangent bundle of Q^2: zero structure constants, identity anchors.
ring { vars: x1 x2; }
algebroid {
  base_vars: x1 x2;
  rank: 2;
  anchor_left 1 1 : 1;
  anchor_left 2 2 : 1;
  anchor_right 1 1 : 1;
  anchor_right 2 2 : 1;
}
)"},
    {"example1-algebroid", R"(# Example 1 algebra tensored with functions of one variable; zero anchors.
ring { vars: t; }
algebroid {
  base_vars: t;
  rank: 3;
  c 1 1 2 : 1;
  c 1 3 3 : 1;
  c 3 1 3 : -1;
}
)"},
}};

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, src] : kEntries) out.emplace_back(name);
  return out;
}

std::string_view catalog_source(std::string_view name) {
  for (const auto& [n, src] : kEntries)
    if (n == name) return src;
  throw UsageError("unknown catalog entry '" + std::string(name) + "'");
}

SpecFile catalog(std::string_view name) { return parse_spec(catalog_source(name)); }

}  // namespace nlb
