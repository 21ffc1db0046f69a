#include "nlb/hamgeo.hpp"

#include "bracket_kernel.hpp"
#include "nlb/errors.hpp"
#include "nlb/parallel.hpp"

namespace nlb {
namespace {

Verdict preservation_up_to(const BracketTensor& t, unsigned degree, const CheckOptions& opts) {
  const std::size_t n = t.arity();
  const detail::TestSet set(t.ring(), degree);
  const std::uint64_t total = detail::ipow(set.size(), n - 1);

  struct Hit {
    IndexTuple index;
    Polynomial component;
  };
  auto probe = [&](std::uint64_t k) -> std::optional<Hit> {
    std::vector<std::size_t> digits(n - 1);
    detail::decode(k, set.size(), digits);
    std::vector<Polynomial> fs;
    for (auto d : digits) fs.push_back(set.values[d]);
    const BracketTensor l = lie_derivative(t, hamiltonian_field(t, fs));
    if (l.is_zero()) return std::nullopt;
    const auto& first = *l.coefficients().begin();
    return Hit{first.first, first.second};
  };

  Verdict v;
  v.tuples_total = total;
  auto hit = first_violation<Hit>(total, opts.workers, probe);
  if (!hit) {
    v.tuples_checked = total;
    v.heuristic_pass = !t.ring().is_free();
    return v;
  }
  std::vector<std::size_t> digits(n - 1);
  detail::decode(hit->first, set.size(), digits);
  std::vector<Polynomial> inputs;
  for (auto d : digits) inputs.push_back(set.values[d]);
  v.passed = false;
  v.tuples_checked = hit->first + 1;
  v.witness = Witness{std::move(inputs), std::move(hit->second.component),
                      std::move(hit->second.index)};
  return v;
}

}  // namespace

VectorField::VectorField(Ring ring) : ring_(std::move(ring)) {
  components_.assign(ring_.nvars(), Polynomial(ring_.nvars()));
}

VectorField::VectorField(Ring ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_.nvars())
    throw StructuralError("vector field needs one component per variable");
  for (auto& c : components_) {
    require_ring(c, ring_, "VectorField");
    c = reduce(c, ring_);
  }
}

bool VectorField::is_zero() const noexcept {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

Polynomial VectorField::apply(const Polynomial& f) const {
  require_ring(f, ring_, "VectorField::apply");
  Polynomial out(ring_.nvars());
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].is_zero()) continue;
    out += multiply(components_[j], derive(f, j), ring_);
  }
  return out;
}

VectorField hamiltonian_field(const BracketTensor& t, std::span<const Polynomial> fs) {
  const std::size_t n = t.arity();
  const Ring& ring = t.ring();
  if (fs.size() + 1 != n)
    throw StructuralError("hamiltonian_field: expected " + std::to_string(n - 1) + " functions");
  std::vector<detail::Gradient> grads;
  for (const auto& f : fs) {
    require_ring(f, ring, "hamiltonian_field");
    grads.push_back(detail::gradient(f));
  }
  std::vector<Polynomial> comps(ring.nvars(), Polynomial(ring.nvars()));
  for (const auto& [idx, c] : t.coefficients()) {
    Polynomial prod = c;
    for (std::size_t s = 0; s + 1 < n && !prod.is_zero(); ++s)
      prod = multiply(prod, grads[s][idx[s]], ring);
    comps[idx[n - 1]] += prod;
  }
  return VectorField(ring, std::move(comps));
}

BracketTensor lie_derivative(const BracketTensor& t, const VectorField& x) {
  const Ring& ring = t.ring();
  if (!(x.ring() == ring)) throw StructuralError("lie_derivative: ring mismatch");
  const std::size_t m = ring.nvars();
  BracketTensor out(ring, t.arity());
  if (x.is_zero()) return out;

  // dx[i][k] = d_k X^i
  std::vector<detail::Gradient> dx;
  for (const auto& c : x.components()) dx.push_back(detail::gradient(c));

  for (const auto& [idx, c] : t.coefficients()) {
    out.add(idx, x.apply(c));
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const std::size_t k = idx[s];
      IndexTuple target(idx);
      for (std::size_t i = 0; i < m; ++i) {
        if (dx[i][k].is_zero()) continue;
        target[s] = i;
        out.add(target, -multiply(c, dx[i][k], ring));
      }
    }
  }
  return out;
}

Verdict preservation_check(const BracketTensor& t, const CheckOptions& opts) {
  return preservation_up_to(t, 2, opts);
}

Verdict linear_preservation_check(const BracketTensor& t, const CheckOptions& opts) {
  return preservation_up_to(t, 1, opts);
}

}  // namespace nlb
