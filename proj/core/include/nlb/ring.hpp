#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlb/monomial.hpp"

namespace nlb {

/// Polynomial ring Q[x_1..x_m], optionally modulo an ideal generated by
/// monomials (nilpotent generators). Immutable; copies share storage.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> variables, std::vector<Monomial> nilpotent = {});

  std::size_t nvars() const noexcept { return d_->variables.size(); }
  const std::vector<std::string>& variables() const noexcept { return d_->variables; }
  const std::vector<Monomial>& nilpotent_generators() const noexcept { return d_->nilpotent; }
  bool is_free() const noexcept { return d_->nilpotent.empty(); }

  /// A monomial is standard when no nilpotent generator divides it.
  bool is_standard(const Monomial& m) const noexcept;

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> variables;
    std::vector<Monomial> nilpotent;
  };
  std::shared_ptr<const Data> d_;
};

bool is_identifier(std::string_view name) noexcept;

}  // namespace nlb
