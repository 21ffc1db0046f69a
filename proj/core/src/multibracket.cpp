#include "nlb/multibracket.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bracket_kernel.hpp"
#include "nlb/errors.hpp"
#include "nlb/parallel.hpp"
#include "nlb/random.hpp"

namespace nlb {
namespace {

using detail::Gradient;

void check_args(const BracketTensor& t, std::span<const Polynomial> args, std::size_t expected,
                const char* what) {
  if (args.size() != expected)
    throw StructuralError(std::string(what) + ": expected " + std::to_string(expected) +
                          " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args) require_ring(a, t.ring(), what);
}

Polynomial eval_with(const BracketTensor& t, std::span<const Polynomial> args) {
  std::vector<Gradient> grads;
  grads.reserve(args.size());
  for (const auto& a : args) grads.push_back(detail::gradient(a));
  std::vector<const Gradient*> ptrs;
  for (const auto& g : grads) ptrs.push_back(&g);
  return detail::contract(t, ptrs);
}

// Brackets of all n-tuples of test monomials, indexed in enumeration order.
class BracketTable {
 public:
  BracketTable(const BracketTensor& t, const detail::TestSet& set) : n_(t.arity()), base_(set.size()) {
    const std::uint64_t total = detail::ipow(base_, n_);
    values_.reserve(total);
    std::vector<std::size_t> digits(n_);
    std::vector<const Gradient*> ptrs(n_);
    for (std::uint64_t k = 0; k < total; ++k) {
      detail::decode(k, base_, digits);
      for (std::size_t s = 0; s < n_; ++s) ptrs[s] = &set.grads[digits[s]];
      values_.push_back(detail::contract(t, ptrs));
    }
  }

  const Polynomial& at(std::span<const std::size_t> digits) const {
    std::uint64_t k = 0;
    for (auto d : digits) k = k * base_ + d;
    return values_[k];
  }

 private:
  std::size_t n_;
  std::size_t base_;
  std::vector<Polynomial> values_;
};

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Polynomial bracket_eval(const BracketTensor& t, std::span<const Polynomial> args) {
  check_args(t, args, t.arity(), "bracket_eval");
  return eval_with(t, args);
}

Polynomial leibniz_defect(const BracketTensor& t, std::size_t slot, const Polynomial& f,
                          const Polynomial& f2, std::span<const Polynomial> others) {
  const std::size_t n = t.arity();
  if (slot >= n) throw StructuralError("leibniz_defect: slot out of range");
  check_args(t, others, n - 1, "leibniz_defect");
  require_ring(f, t.ring(), "leibniz_defect");
  require_ring(f2, t.ring(), "leibniz_defect");
  const Ring& ring = t.ring();

  auto with = [&](const Polynomial& p) {
    std::vector<Polynomial> args(others.begin(), others.end());
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(slot), p);
    return eval_with(t, args);
  };
  Polynomial d = with(multiply(f, f2, ring));
  d -= multiply(f, with(f2), ring);
  d -= multiply(with(f), f2, ring);
  return d;
}

Verdict is_skew(const BracketTensor& t) {
  const Ring& ring = t.ring();
  const std::size_t n = t.arity();
  const auto tuples = all_index_tuples(ring.nvars(), n);
  Verdict v;
  v.tuples_total = tuples.size();

  auto coordinate_inputs = [&](const IndexTuple& idx) {
    std::vector<Polynomial> in;
    for (auto i : idx) in.push_back(reduce(Polynomial::variable(ring.nvars(), i), ring));
    return in;
  };

  for (const auto& idx : tuples) {
    ++v.tuples_checked;
    const Polynomial c = t.at(idx);
    std::vector<std::size_t> sorted(idx);
    std::sort(sorted.begin(), sorted.end());
    const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    if (repeated) {
      if (!c.is_zero()) {
        v.passed = false;
        v.witness = Witness{coordinate_inputs(idx), c, idx};
        return v;
      }
      continue;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        IndexTuple swapped(idx);
        std::swap(swapped[a], swapped[b]);
        Polynomial d = c + t.at(swapped);
        if (!d.is_zero()) {
          v.passed = false;
          v.witness = Witness{coordinate_inputs(idx), std::move(d), idx};
          return v;
        }
      }
    }
  }
  return v;
}

BracketTensor skew_part(const BracketTensor& t) {
  const std::size_t n = t.arity();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<std::int64_t>(k);
  const Rational scale(1, factorial);

  BracketTensor out(t.ring(), n);
  do {
    const Rational coeff = scale * Rational(permutation_sign(perm));
    for (const auto& [idx, c] : t.coefficients()) {
      // Coefficient at I lands at I o sigma.
      IndexTuple target(n);
      for (std::size_t s = 0; s < n; ++s) target[s] = idx[perm[s]];
      out.add(target, c * coeff);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BracketTensor sym_defect(const BracketTensor& t) { return t - skew_part(t); }

Polynomial fi_defect(const BracketTensor& t, std::span<const Polynomial> fs,
                     std::span<const Polynomial> gs) {
  const std::size_t n = t.arity();
  check_args(t, fs, n - 1, "fi_defect");
  check_args(t, gs, n, "fi_defect");

  std::vector<Polynomial> args(fs.begin(), fs.end());
  args.push_back(eval_with(t, gs));
  Polynomial d = eval_with(t, args);
  for (std::size_t k = 0; k < n; ++k) {
    args.back() = gs[k];
    std::vector<Polynomial> outer(gs.begin(), gs.end());
    outer[k] = eval_with(t, args);
    d -= eval_with(t, outer);
  }
  return d;
}

Verdict fi_check(const BracketTensor& t, const CheckOptions& opts) {
  const std::size_t n = t.arity();
  const Ring& ring = t.ring();
  const detail::TestSet set(ring, 2);
  const BracketTable table(t, set);
  const std::size_t slots = 2 * n - 1;
  const std::uint64_t total = detail::ipow(set.size(), slots);

  auto probe = [&](std::uint64_t index) -> std::optional<Polynomial> {
    std::vector<std::size_t> digits(slots);
    detail::decode(index, set.size(), digits);
    const std::span<const std::size_t> f_digits(digits.data(), n - 1);
    const std::span<const std::size_t> g_digits(digits.data() + n - 1, n);
    // A constant f kills both sides.
    for (auto d : f_digits)
      if (set.values[d].is_constant()) return std::nullopt;

    std::vector<const Gradient*> ptrs(n);
    for (std::size_t s = 0; s + 1 < n; ++s) ptrs[s] = &set.grads[f_digits[s]];
    const Gradient inner = detail::gradient(table.at(g_digits));
    ptrs[n - 1] = &inner;
    Polynomial d = detail::contract(t, ptrs);

    std::vector<std::size_t> fg(n);
    std::copy(f_digits.begin(), f_digits.end(), fg.begin());
    for (std::size_t k = 0; k < n; ++k) {
      fg[n - 1] = g_digits[k];
      const Polynomial& hk = table.at(fg);
      if (hk.is_zero()) continue;
      const Gradient hk_grad = detail::gradient(hk);
      for (std::size_t s = 0; s < n; ++s) ptrs[s] = s == k ? &hk_grad : &set.grads[g_digits[s]];
      d -= detail::contract(t, ptrs);
    }
    if (d.is_zero()) return std::nullopt;
    return d;
  };

  Verdict v;
  v.tuples_total = total;
  auto hit = first_violation<Polynomial>(total, opts.workers, probe);
  if (hit) {
    std::vector<std::size_t> digits(slots);
    detail::decode(hit->first, set.size(), digits);
    std::vector<Polynomial> inputs;
    for (auto d : digits) inputs.push_back(set.values[d]);
    v.passed = false;
    v.witness = Witness{std::move(inputs), std::move(hit->second), std::nullopt};
    v.tuples_checked = hit->first + 1;
  } else {
    v.tuples_checked = total;
    v.heuristic_pass = !ring.is_free();
  }
  return v;
}

Polynomial polarization_defect(const BracketTensor& t, std::size_t i,
                               std::span<const Polynomial> fs, std::span<const Polynomial> gs) {
  const std::size_t n = t.arity();
  check_args(t, fs, n - 1, "polarization_defect");
  check_args(t, gs, n, "polarization_defect");
  if (i >= n - 1) throw StructuralError("polarization_defect: index out of range");
  const Ring& ring = t.ring();

  std::vector<Polynomial> args(fs.begin(), fs.end());
  args.push_back(eval_with(t, gs));
  Polynomial d = multiply(fs[i], eval_with(t, args), ring);
  for (std::size_t k = 0; k < n; ++k) {
    args.back() = gs[k];
    std::vector<Polynomial> outer(gs.begin(), gs.end());
    outer[k] = multiply(fs[i], eval_with(t, args), ring);
    d -= eval_with(t, outer);
  }
  return d;
}

Polynomial key_identity_defect(const BracketTensor& t, std::size_t i,
                               std::span<const Polynomial> fs, std::span<const Polynomial> gs) {
  const std::size_t n = t.arity();
  check_args(t, fs, n - 1, "key_identity_defect");
  check_args(t, gs, n, "key_identity_defect");
  if (i >= n - 1) throw StructuralError("key_identity_defect: index out of range");
  const Ring& ring = t.ring();

  Polynomial sum(ring.nvars());
  std::vector<Polynomial> args(fs.begin(), fs.end());
  args.emplace_back();
  for (std::size_t k = 0; k < n; ++k) {
    args.back() = gs[k];
    std::vector<Polynomial> swapped(gs.begin(), gs.end());
    swapped[k] = fs[i];
    sum += multiply(eval_with(t, args), eval_with(t, swapped), ring);
  }
  return -sum;
}

Verdict alternation_check(const BracketTensor& t, const CheckOptions& opts) {
  const std::size_t n = t.arity();
  const detail::TestSet set(t.ring(), 2);
  const BracketTable table(t, set);
  const std::uint64_t total = detail::ipow(set.size(), n);

  auto probe = [&](std::uint64_t index) -> std::optional<Polynomial> {
    std::vector<std::size_t> digits(n);
    detail::decode(index, set.size(), digits);
    std::vector<std::size_t> sorted(digits);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return std::nullopt;
    const Polynomial& b = table.at(digits);
    if (b.is_zero()) return std::nullopt;
    return b;
  };

  Verdict v;
  v.tuples_total = total;
  auto hit = first_violation<Polynomial>(total, opts.workers, probe);
  if (!hit) {
    v.tuples_checked = total;
    v.heuristic_pass = !t.ring().is_free();
    return v;
  }
  std::vector<std::size_t> digits(n);
  detail::decode(hit->first, set.size(), digits);
  std::vector<Polynomial> inputs;
  std::size_t most = 0;
  for (auto d : digits) {
    inputs.push_back(set.values[d]);
    most = std::max<std::size_t>(most, static_cast<std::size_t>(
                                           std::count(digits.begin(), digits.end(), d)));
  }
  v.passed = false;
  v.witness = Witness{std::move(inputs), std::move(hit->second), std::nullopt};
  v.tuples_checked = hit->first + 1;
  v.equal_slots = most;
  return v;
}

Verdict leibniz_sampling(const BracketTensor& t, std::uint64_t samples, std::uint64_t seed,
                         unsigned max_degree) {
  const std::size_t n = t.arity();
  const Ring& ring = t.ring();
  Verdict v;
  v.tuples_total = samples * n;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t stream = mix_seed(seed, s);
    auto next = [&] {
      stream = mix_seed(stream, 0);
      return random_poly(ring, max_degree, 3, stream);
    };
    const Polynomial f = next();
    const Polynomial f2 = next();
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k + 1 < n; ++k) others.push_back(next());
    for (std::size_t slot = 0; slot < n; ++slot) {
      ++v.tuples_checked;
      Polynomial d = leibniz_defect(t, slot, f, f2, others);
      if (!d.is_zero()) {
        std::vector<Polynomial> inputs(others);
        inputs.insert(inputs.begin() + static_cast<std::ptrdiff_t>(slot), f2);
        inputs.insert(inputs.begin() + static_cast<std::ptrdiff_t>(slot), f);
        v.passed = false;
        v.witness = Witness{std::move(inputs), std::move(d), std::nullopt};
        return v;
      }
    }
  }
  return v;
}

}  // namespace nlb
