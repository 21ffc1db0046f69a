#include "nlb/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "nlb/errors.hpp"
#include "nlb/random.hpp"

namespace nlb {
namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Sorted input with possible duplicates -> canonical output.
std::vector<Term> combine_sorted(std::vector<Term>&& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void append_monomial(std::string& out, const Monomial& m, std::span<const std::string> names) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::size_t var, Monomial& cur,
                         const std::function<void(const Monomial&)>& emit) {
  if (var + 1 == nvars) {
    cur[var] = degree;
    emit(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    cur[var] = e;
    monomials_of_degree(nvars, degree - e, var + 1, cur, emit);
  }
  cur[var] = 0;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.size());
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  return term(Monomial::variable(nvars, index), 1);
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != nvars) throw StructuralError("term has wrong variable count");
  std::stable_sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(nvars);
  p.terms_ = combine_sorted(std::move(terms));
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint64_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::add_scaled(const Polynomial& rhs, bool negate) {
  if (rhs.nvars_ != nvars_) {
    if (rhs.is_zero()) return;
    if (is_zero() && nvars_ == 0) {
      nvars_ = rhs.nvars_;
    } else {
      throw StructuralError("polynomial variable counts differ");
    }
  }
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back({b->monomial, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      Rational c = a->coeff;
      if (negate) {
        c -= b->coeff;
      } else {
        c += b->coeff;
      }
      if (!c.is_zero()) out.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  add_scaled(rhs, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  add_scaled(rhs, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (t.monomial.is_one()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      append_monomial(out, t.monomial, names);
    }
  }
  return out;
}

void require_ring(const Polynomial& p, const Ring& ring, const char* what) {
  if (p.nvars() != ring.nvars())
    throw StructuralError(std::string(what) + ": polynomial has " + std::to_string(p.nvars()) +
                          " variables, ring has " + std::to_string(ring.nvars()));
}

Polynomial reduce(const Polynomial& p, const Ring& ring) {
  require_ring(p, ring, "reduce");
  if (ring.is_free()) return p;
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (ring.is_standard(t.monomial)) kept.push_back(t);
  // Deletion keeps the order, so from_terms only re-validates.
  return Polynomial::from_terms(ring.nvars(), std::move(kept));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q, const Ring& ring) {
  require_ring(p, ring, "multiply");
  require_ring(q, ring, "multiply");
  if (p.is_zero() || q.is_zero()) return Polynomial(ring.nvars());
  const bool free = ring.is_free();
  const Polynomial& big = p.size() >= q.size() ? p : q;
  const Polynomial& small = p.size() >= q.size() ? q : p;

  std::vector<Term> out;
  out.reserve(big.size() * small.size());
  for (const auto& s : small.terms()) {
    for (const auto& b : big.terms()) {
      Monomial m = b.monomial * s.monomial;
      if (!free && !ring.is_standard(m)) continue;
      out.push_back({std::move(m), b.coeff * s.coeff});
    }
  }
  // A single-term factor shifts every monomial by the same amount, which
  // preserves graded-lex order.
  if (small.size() > 1) std::stable_sort(out.begin(), out.end(), term_greater);
  return Polynomial::from_terms(ring.nvars(), std::move(out));
}

Polynomial power(const Polynomial& p, std::uint64_t exponent, const Ring& ring) {
  require_ring(p, ring, "power");
  Polynomial result = Polynomial::constant(ring.nvars(), 1);
  result = reduce(result, ring);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base, ring);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base, ring);
  }
  return result;
}

Polynomial derive(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.nvars()) throw StructuralError("derive: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[var_index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var_index] = e - 1;
    out.push_back({std::move(m), t.coeff * Rational(static_cast<std::int64_t>(e))});
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

Rational eval_point(const Polynomial& p, std::span<const Rational> point, const Ring& ring) {
  require_ring(p, ring, "eval_point");
  if (!ring.is_free())
    throw UnsupportedError("eval_point: point evaluation is undefined modulo nilpotents");
  if (point.size() != ring.nvars())
    throw StructuralError("eval_point: point has " + std::to_string(point.size()) +
                          " coordinates, ring has " + std::to_string(ring.nvars()));
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Monomial::Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

std::vector<Monomial> standard_monomials(const Ring& ring, unsigned max_degree) {
  std::vector<Monomial> out;
  const std::size_t n = ring.nvars();
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  Monomial cur(n);
  for (unsigned d = 0; d <= max_degree; ++d) {
    monomials_of_degree(n, d, 0, cur, [&](const Monomial& m) {
      if (ring.is_standard(m)) out.push_back(m);
    });
  }
  return out;
}

Polynomial random_poly(const Ring& ring, unsigned max_degree, std::int64_t coeff_bound,
                       std::uint64_t seed) {
  if (coeff_bound < 1) throw StructuralError("random_poly: coeff_bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Term> terms;
  for (auto& m : standard_monomials(ring, max_degree)) {
    const std::int64_t c = uniform_int(rng, -coeff_bound, coeff_bound);
    if (c != 0) terms.push_back({std::move(m), c});
  }
  return Polynomial::from_terms(ring.nvars(), std::move(terms));
}

}  // namespace nlb
