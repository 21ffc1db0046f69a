#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"
#include "nlb/verdict.hpp"

namespace nlb {

/// {f_1, ..., f_n} = sum_I T^I d_{i_1} f_1 ... d_{i_n} f_n, reduced in T's ring.
Polynomial bracket_eval(const BracketTensor& t, std::span<const Polynomial> args);

/// {.., f*f2, ..} - f*{.., f2, ..} - {.., f, ..}*f2 with the product in slot
/// `slot` (0-based) and `others` filling the remaining n-1 slots in order.
Polynomial leibniz_defect(const BracketTensor& t, std::size_t slot, const Polynomial& f,
                          const Polynomial& f2, std::span<const Polynomial> others);

/// Passes iff every coefficient flips sign under every slot transposition and
/// coefficients at tuples with a repeated index vanish. The witness carries the
/// offending index tuple, the coordinate functions at it as inputs, and either
/// the coefficient (repeated index) or T^I + T^{tau I} as defect.
Verdict is_skew(const BracketTensor& t);

/// (1/n!) sum_sigma sign(sigma) T^{I o sigma}.
BracketTensor skew_part(const BracketTensor& t);
/// t - skew_part(t).
BracketTensor sym_defect(const BracketTensor& t);

/// {f_1..f_{n-1}, {g_1..g_n}} - sum_k {g_1, .., {f_1..f_{n-1}, g_k}, .., g_n}.
Polynomial fi_defect(const BracketTensor& t, std::span<const Polynomial> fs,
                     std::span<const Polynomial> gs);

/// Exhausts (2n-1)-tuples of standard monomials of degree <= 2, ordered
/// lexicographically over (f_1..f_{n-1}, g_1..g_n) with each slot in
/// standard_monomials() order. On a free ring this test set is complete.
Verdict fi_check(const BracketTensor& t, const CheckOptions& opts = {});

/// f_i*{f_1..f_{n-1}, {g}} - sum_k {g_1, .., f_i*{f_1..f_{n-1}, g_k}, .., g_n};
/// the identity obtained from FI by substituting f_i -> f_i^2/2. i is 0-based.
Polynomial polarization_defect(const BracketTensor& t, std::size_t i,
                               std::span<const Polynomial> fs, std::span<const Polynomial> gs);

/// Residual of subtracting f_i * FI from the polarized identity:
///   -sum_k {f_1..f_{n-1}, g_k} * {g_1, .., g_{k-1}, f_i, g_{k+1}, .., g_n}.
/// Equals polarization_defect - f_i * fi_defect for every input, and vanishes
/// whenever the bracket satisfies FI.
Polynomial key_identity_defect(const BracketTensor& t, std::size_t i,
                               std::span<const Polynomial> fs, std::span<const Polynomial> gs);

/// Passes iff the bracket vanishes on every n-tuple of standard monomials of
/// degree <= 2 in which two slots carry the same monomial.
Verdict alternation_check(const BracketTensor& t, const CheckOptions& opts = {});

/// leibniz_defect on `samples` seeded random argument sets, every slot.
Verdict leibniz_sampling(const BracketTensor& t, std::uint64_t samples, std::uint64_t seed,
                         unsigned max_degree = 2);

}  // namespace nlb
