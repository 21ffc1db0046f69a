#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nlb/polynomial.hpp"
#include "nlb/ring.hpp"

namespace nlb {

/// 0-based variable indices, one per bracket slot.
using IndexTuple = std::vector<std::size_t>;

/// Contravariant n-tensor with polynomial coefficients, sparse (a missing
/// tuple means a zero coefficient). Defines the bracket
/// {f_1..f_n} = sum_I T^I d_{i_1} f_1 ... d_{i_n} f_n.
class BracketTensor {
 public:
  BracketTensor() = default;
  BracketTensor(Ring ring, std::size_t arity);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::map<IndexTuple, Polynomial>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Stores reduce(value); a zero value erases the entry.
  void set(const IndexTuple& index, const Polynomial& value);
  /// Adds to the existing coefficient.
  void add(const IndexTuple& index, const Polynomial& value);
  Polynomial at(const IndexTuple& index) const;

  BracketTensor& operator+=(const BracketTensor& rhs);
  BracketTensor& operator-=(const BracketTensor& rhs);
  BracketTensor& operator*=(const Rational& c);
  friend BracketTensor operator+(BracketTensor a, const BracketTensor& b) { return a += b; }
  friend BracketTensor operator-(BracketTensor a, const BracketTensor& b) { return a -= b; }
  friend BracketTensor operator*(const Rational& c, BracketTensor a) { return a *= c; }

  friend bool operator==(const BracketTensor&, const BracketTensor&) = default;

 private:
  void check_index(const IndexTuple& index) const;
  void check_compatible(const BracketTensor& rhs) const;

  Ring ring_;
  std::size_t arity_ = 0;
  std::map<IndexTuple, Polynomial> coeffs_;
};

/// Every n-tuple over {0..m-1}, lexicographic.
std::vector<IndexTuple> all_index_tuples(std::size_t nvars, std::size_t arity);

/// Renders an index tuple 1-based, e.g. "(1,3)".
std::string format_index(const IndexTuple& index);

}  // namespace nlb
