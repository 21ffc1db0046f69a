#pragma once

// Test-only reference arithmetic: dense-map polynomials over mpq_class with
// naive product, derivative and bracket. Shares no code with the library's
// polynomial kernel; used to freeze expected values and cross-check results.

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;
using RefPoly = std::map<Exps, mpq_class>;
using Nilpotents = std::vector<Exps>;

inline void prune(RefPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline bool divisible(const Exps& m, const Nilpotents& gens) {
  for (const auto& g : gens) {
    bool all = true;
    for (std::size_t i = 0; i < m.size(); ++i) all = all && g[i] <= m[i];
    if (all) return true;
  }
  return false;
}

inline RefPoly from(const nlb::Polynomial& p) {
  RefPoly r;
  for (const auto& t : p.terms()) {
    Exps e(t.monomial.exponents().begin(), t.monomial.exponents().end());
    r[e] = t.coeff.to_mpq();
  }
  return r;
}

inline Nilpotents gens_of(const nlb::Ring& ring) {
  Nilpotents out;
  for (const auto& g : ring.nilpotent_generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

inline RefPoly add(RefPoly a, const RefPoly& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

inline RefPoly mul(const RefPoly& a, const RefPoly& b, const Nilpotents& gens) {
  RefPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (divisible(e, gens)) continue;
      r[e] += ca * cb;
    }
  }
  prune(r);
  return r;
}

inline RefPoly deriv(const RefPoly& a, std::size_t var) {
  RefPoly r;
  for (const auto& [e, c] : a) {
    if (e[var] == 0) continue;
    Exps d = e;
    --d[var];
    r[d] += c * static_cast<unsigned long>(e[var]);
  }
  prune(r);
  return r;
}

inline RefPoly constant(std::size_t nvars, const mpq_class& c) {
  RefPoly r;
  if (c != 0) r[Exps(nvars, 0)] = c;
  return r;
}

/// Tensor as a plain list of (index tuple, coefficient).
struct RefTensor {
  std::size_t nvars;
  std::vector<std::pair<std::vector<std::size_t>, RefPoly>> entries;
  Nilpotents gens;
};

inline RefTensor from(const nlb::BracketTensor& t) {
  RefTensor r{t.ring().nvars(), {}, gens_of(t.ring())};
  for (const auto& [idx, c] : t.coefficients()) r.entries.emplace_back(idx, from(c));
  return r;
}

inline RefPoly bracket(const RefTensor& t, const std::vector<RefPoly>& args) {
  RefPoly sum;
  for (const auto& [idx, c] : t.entries) {
    RefPoly prod = c;
    for (std::size_t s = 0; s < idx.size(); ++s) prod = mul(prod, deriv(args[s], idx[s]), t.gens);
    sum = add(sum, prod);
  }
  return sum;
}

/// FI defect evaluated by the naive route.
inline RefPoly fi_defect(const RefTensor& t, const std::vector<RefPoly>& fs,
                         const std::vector<RefPoly>& gs) {
  std::vector<RefPoly> args = fs;
  args.push_back(bracket(t, gs));
  RefPoly d = bracket(t, args);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    args.back() = gs[k];
    std::vector<RefPoly> outer = gs;
    outer[k] = bracket(t, args);
    d = add(d, bracket(t, outer), -1);
  }
  return d;
}

}  // namespace oracle
