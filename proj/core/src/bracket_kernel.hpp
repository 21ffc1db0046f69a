#pragma once

// Internal evaluation kernel shared by the bracket, geometry and check code.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"

namespace nlb::detail {

using Gradient = std::vector<Polynomial>;

inline Gradient gradient(const Polynomial& p) {
  Gradient g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(derive(p, i));
  return g;
}

/// sum_I T^I grads[0][i_0] ... grads[n-1][i_{n-1}]
inline Polynomial contract(const BracketTensor& t, std::span<const Gradient* const> grads) {
  const Ring& ring = t.ring();
  Polynomial sum(ring.nvars());
  for (const auto& [idx, c] : t.coefficients()) {
    bool zero = false;
    for (std::size_t s = 0; s < idx.size() && !zero; ++s) zero = (*grads[s])[idx[s]].is_zero();
    if (zero) continue;
    Polynomial prod = (*grads[0])[idx[0]];
    for (std::size_t s = 1; s < idx.size() && !prod.is_zero(); ++s)
      prod = multiply(prod, (*grads[s])[idx[s]], ring);
    if (prod.is_zero()) continue;
    sum += multiply(prod, c, ring);
  }
  return sum;
}

/// Standard monomials of degree <= 2 as polynomials, with cached gradients.
struct TestSet {
  std::vector<Polynomial> values;
  std::vector<Gradient> grads;

  TestSet(const Ring& ring, unsigned max_degree) {
    for (auto& m : standard_monomials(ring, max_degree)) {
      values.push_back(Polynomial::term(std::move(m), 1));
      grads.push_back(gradient(values.back()));
    }
  }
  std::size_t size() const { return values.size(); }
};

/// Mixed-radix decoding, slot 0 most significant.
inline void decode(std::uint64_t index, std::size_t base, std::span<std::size_t> digits) {
  for (std::size_t s = digits.size(); s-- > 0;) {
    digits[s] = static_cast<std::size_t>(index % base);
    index /= base;
  }
}

inline std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace nlb::detail
