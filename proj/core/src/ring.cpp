#include "nlb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "nlb/errors.hpp"

namespace nlb {

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Ring::Ring() : d_(std::make_shared<const Data>()) {}

Ring::Ring(std::vector<std::string> variables, std::vector<Monomial> nilpotent) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw StructuralError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable '" + v + "'");
  }
  std::vector<Monomial> gens;
  for (auto& g : nilpotent) {
    if (g.size() != variables.size())
      throw StructuralError("nilpotent generator has wrong variable count");
    if (g.is_one()) throw StructuralError("nilpotent generator must be nonconstant");
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  d_ = std::make_shared<const Data>(Data{std::move(variables), std::move(gens)});
}

bool Ring::is_standard(const Monomial& m) const noexcept {
  for (const auto& g : d_->nilpotent)
    if (g.divides(m)) return false;
  return true;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& vs = d_->variables;
  const auto it = std::find(vs.begin(), vs.end(), name);
  if (it == vs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vs.begin());
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->variables == b.d_->variables && a.d_->nilpotent == b.d_->nilpotent;
}

}  // namespace nlb
