#pragma once

#include <span>
#include <vector>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"
#include "nlb/verdict.hpp"

namespace nlb {

/// Polynomial vector field sum_j X^j d_j.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(Ring ring);  // zero field
  VectorField(Ring ring, std::vector<Polynomial> components);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Polynomial> components() const noexcept { return components_; }
  const Polynomial& operator[](std::size_t j) const { return components_[j]; }
  bool is_zero() const noexcept;

  /// X(f) = sum_j X^j d_j f
  Polynomial apply(const Polynomial& f) const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  Ring ring_;
  std::vector<Polynomial> components_;
};

/// Left Hamiltonian field {f_1, .., f_{n-1}, .}: contraction of the first n-1
/// slots with df_1..df_{n-1}; the last slot is the output direction.
VectorField hamiltonian_field(const BracketTensor& t, std::span<const Polynomial> fs);

/// (L_X T)^I = X^k d_k T^I - sum_s T^{I[s<-k]} d_k X^{i_s}.
BracketTensor lie_derivative(const BracketTensor& t, const VectorField& x);

/// Passes iff L_{X_fs} T = 0 for every (n-1)-tuple fs of standard monomials of
/// degree <= 2. The witness holds fs, the first nonzero component of the Lie
/// derivative, and that component's index tuple.
Verdict preservation_check(const BracketTensor& t, const CheckOptions& opts = {});

/// As preservation_check with fs restricted to degree <= 1.
Verdict linear_preservation_check(const BracketTensor& t, const CheckOptions& opts = {});

}  // namespace nlb
