#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace nlb {

__extension__ typedef __int128 int128_t;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an int64 are kept inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. The representation is
/// canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : rep_(Small{value, 1}) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "p" or "p/q" with optional leading sign; digits may exceed 64 bits.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  int sign() const noexcept;
  bool is_integer() const;

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Small {
    std::int64_t num = 0;
    std::int64_t den = 1;
  };

  void assign(int128_t num, int128_t den);
  void demote();

  std::variant<Small, mpq_class> rep_{Small{}};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace nlb
