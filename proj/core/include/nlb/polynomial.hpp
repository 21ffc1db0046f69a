#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nlb/monomial.hpp"
#include "nlb/rational.hpp"
#include "nlb/ring.hpp"

namespace nlb {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded-lex monomial with no zero
/// coefficients, so two polynomials are equal iff their term lists are equal.
/// A Polynomial only records its variable count; reduction modulo a ring's
/// nilpotent ideal happens in reduce() and multiply(). Addition, negation and
/// scaling preserve reducedness, as does derive().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial term(Monomial m, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Renders e.g. "2*x1^2*x2 - 1/2*x3 + 1"; "0" for zero.
  std::string str(std::span<const std::string> names) const;
  std::string str(const Ring& ring) const { return str(ring.variables()); }

 private:
  void add_scaled(const Polynomial& rhs, bool negate);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Deletes every term whose monomial is divisible by a nilpotent generator.
Polynomial reduce(const Polynomial& p, const Ring& ring);

/// Reduced product in ring.
Polynomial multiply(const Polynomial& p, const Polynomial& q, const Ring& ring);

/// p^exponent in ring.
Polynomial power(const Polynomial& p, std::uint64_t exponent, const Ring& ring);

/// Formal partial derivative with respect to variable var_index.
Polynomial derive(const Polynomial& p, std::size_t var_index);

/// Exact value of p at point; rejects rings with nilpotents.
Rational eval_point(const Polynomial& p, std::span<const Rational> point, const Ring& ring);

/// Random polynomial of total degree <= max_degree with integer coefficients in
/// [-coeff_bound, coeff_bound]; every standard monomial of that degree range is
/// eligible. Fully determined by seed.
Polynomial random_poly(const Ring& ring, unsigned max_degree, std::int64_t coeff_bound,
                       std::uint64_t seed);

/// Standard monomials of total degree <= max_degree in enumeration order:
/// increasing degree, and within a degree decreasing graded-lex
/// (1, x1, x2, ..., x1^2, x1*x2, ...).
std::vector<Monomial> standard_monomials(const Ring& ring, unsigned max_degree);

/// Throws StructuralError unless p has ring's variable count.
void require_ring(const Polynomial& p, const Ring& ring, const char* what);

}  // namespace nlb
