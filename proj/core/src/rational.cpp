#include "nlb/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace nlb {
namespace {

__extension__ typedef unsigned __int128 uint128_t;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows on the inline path.
bool fits(int128_t v) { return v > kMin && v <= kMax; }

uint128_t gcd128(uint128_t a, uint128_t b) {
  while (b != 0) {
    const uint128_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint128_t magnitude(int128_t v) {
  return v < 0 ? uint128_t(0) - uint128_t(v) : uint128_t(v);
}

mpz_class to_mpz(int128_t v) {
  uint128_t mag = magnitude(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) z = -z;
  return z;
}

bool mpz_fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != kMin;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign(num, den);
}

Rational::Rational(const mpq_class& value) : rep_(value) {
  std::get<mpq_class>(rep_).canonicalize();
  demote();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational: empty literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: malformed literal '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(q);
}

void Rational::assign(int128_t num, int128_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    rep_ = Small{0, 1};
    return;
  }
  const uint128_t g = gcd128(magnitude(num), uint128_t(den));
  if (g > 1) {
    num /= int128_t(g);
    den /= int128_t(g);
  }
  if (fits(num) && fits(den)) {
    rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    return;
  }
  mpq_class q;
  q.get_num() = to_mpz(num);
  q.get_den() = to_mpz(den);
  rep_ = std::move(q);
}

void Rational::demote() {
  auto* q = std::get_if<mpq_class>(&rep_);
  if (q == nullptr) return;
  if (mpz_fits(q->get_num()) && mpz_fits(q->get_den())) {
    rep_ = Small{q->get_num().get_si(), q->get_den().get_si()};
  }
}

bool Rational::is_zero() const noexcept {
  const auto* s = std::get_if<Small>(&rep_);
  return s != nullptr && s->num == 0;
}

bool Rational::is_one() const noexcept {
  const auto* s = std::get_if<Small>(&rep_);
  return s != nullptr && s->num == 1 && s->den == 1;
}

int Rational::sign() const noexcept {
  if (const auto* s = std::get_if<Small>(&rep_)) return (s->num > 0) - (s->num < 0);
  return sgn(std::get<mpq_class>(rep_));
}

bool Rational::is_integer() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return s->den == 1;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

mpq_class Rational::to_mpq() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    mpq_class q;
    q.get_num() = mpz_class(static_cast<signed long>(s->num));
    q.get_den() = mpz_class(static_cast<signed long>(s->den));
    return q;
  }
  return std::get<mpq_class>(rep_);
}

std::string Rational::str() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    if (s->den == 1) return std::to_string(s->num);
    return std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  return std::get<mpq_class>(rep_).get_str(10);
}

Rational Rational::operator-() const {
  Rational r;
  if (const auto* s = std::get_if<Small>(&rep_)) {
    r.rep_ = Small{-s->num, s->den};
  } else {
    r.rep_ = mpq_class(-std::get<mpq_class>(rep_));
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&rhs.rep_);
  if (a != nullptr && b != nullptr) {
    if (a->den == 1 && b->den == 1) {
      assign(int128_t(a->num) + b->num, 1);
    } else {
      assign(int128_t(a->num) * b->den + int128_t(b->num) * a->den,
             int128_t(a->den) * b->den);
    }
    return *this;
  }
  rep_ = mpq_class(to_mpq() + rhs.to_mpq());
  demote();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&rhs.rep_);
  if (a != nullptr && b != nullptr) {
    assign(int128_t(a->num) * b->num, int128_t(a->den) * b->den);
    return *this;
  }
  rep_ = mpq_class(to_mpq() * rhs.to_mpq());
  demote();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&rhs.rep_);
  if (a != nullptr && b != nullptr) {
    assign(int128_t(a->num) * b->den, int128_t(a->den) * b->num);
    return *this;
  }
  rep_ = mpq_class(to_mpq() / rhs.to_mpq());
  demote();
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x != nullptr && y != nullptr) return x->num == y->num && x->den == y->den;
  if ((x == nullptr) != (y == nullptr)) return false;  // canonical: big never fits small
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x != nullptr && y != nullptr) {
    return int128_t(x->num) * y->den <=> int128_t(y->num) * x->den;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace nlb
