#pragma once

#include <string>
#include <vector>

#include "nlb/catalog.hpp"
#include "nlb/format.hpp"
#include "nlb/polynomial.hpp"
#include "nlb/ring.hpp"

namespace nlb::testing {

inline Ring ring_of(std::vector<std::string> names, std::vector<std::string> nilpotent = {}) {
  Ring plain(names);
  std::vector<Monomial> gens;
  for (const auto& g : nilpotent) gens.push_back(parse_polynomial(g, plain).terms()[0].monomial);
  return Ring(std::move(names), std::move(gens));
}

inline Polynomial P(const Ring& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline BracketTensor catalog_tensor(const std::string& name) { return *catalog(name).tensor; }

}  // namespace nlb::testing
