#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace nlb {

/// Exponent vector x_1^{e_1} ... x_m^{e_m}. Compared in graded-lexicographic
/// order with x_1 > x_2 > ... > x_m.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff this divides other (same variable count assumed).
  bool divides(const Monomial& other) const noexcept;

  Monomial& operator*=(const Monomial& rhs);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  boost::container::small_vector<Exponent, 8> exps_;
};

}  // namespace nlb
