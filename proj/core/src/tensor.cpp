#include "nlb/tensor.hpp"

#include "nlb/errors.hpp"

namespace nlb {

BracketTensor::BracketTensor(Ring ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {
  if (arity < 1) throw StructuralError("tensor arity must be >= 1");
}

void BracketTensor::check_index(const IndexTuple& index) const {
  if (index.size() != arity_)
    throw StructuralError("index tuple " + format_index(index) + " does not match arity " +
                          std::to_string(arity_));
  for (auto i : index)
    if (i >= ring_.nvars())
      throw StructuralError("index tuple " + format_index(index) + " out of range for " +
                            std::to_string(ring_.nvars()) + " variables");
}

void BracketTensor::check_compatible(const BracketTensor& rhs) const {
  if (!(ring_ == rhs.ring_) || arity_ != rhs.arity_)
    throw StructuralError("tensors live on different rings or arities");
}

void BracketTensor::set(const IndexTuple& index, const Polynomial& value) {
  check_index(index);
  Polynomial r = reduce(value, ring_);
  if (r.is_zero()) {
    coeffs_.erase(index);
  } else {
    coeffs_.insert_or_assign(index, std::move(r));
  }
}

void BracketTensor::add(const IndexTuple& index, const Polynomial& value) {
  check_index(index);
  Polynomial r = reduce(value, ring_);
  if (r.is_zero()) return;
  auto it = coeffs_.find(index);
  if (it == coeffs_.end()) {
    coeffs_.emplace(index, std::move(r));
    return;
  }
  it->second += r;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Polynomial BracketTensor::at(const IndexTuple& index) const {
  check_index(index);
  const auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Polynomial(ring_.nvars()) : it->second;
}

BracketTensor& BracketTensor::operator+=(const BracketTensor& rhs) {
  check_compatible(rhs);
  for (const auto& [idx, c] : rhs.coeffs_) add(idx, c);
  return *this;
}

BracketTensor& BracketTensor::operator-=(const BracketTensor& rhs) {
  check_compatible(rhs);
  for (const auto& [idx, c] : rhs.coeffs_) add(idx, -c);
  return *this;
}

BracketTensor& BracketTensor::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, p] : coeffs_) p *= c;
  return *this;
}

std::vector<IndexTuple> all_index_tuples(std::size_t nvars, std::size_t arity) {
  std::vector<IndexTuple> out;
  if (nvars == 0) return out;
  IndexTuple cur(arity, 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < nvars) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (arity == 0) return out;
  }
}

std::string format_index(const IndexTuple& index) {
  std::string s = "(";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(index[k] + 1);
  }
  return s + ")";
}

}  // namespace nlb
