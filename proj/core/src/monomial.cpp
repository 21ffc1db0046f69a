#include "nlb/monomial.hpp"

#include <numeric>

namespace nlb {

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_[index] = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += rhs.exps_[i];
  return *this;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.exps_.size() && i < b.exps_.size(); ++i)
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  return a.exps_.size() <=> b.exps_.size();
}

}  // namespace nlb
