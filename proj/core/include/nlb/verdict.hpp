#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"

namespace nlb {

/// First violating input of a check, with the nonzero defect it produced.
struct Witness {
  std::vector<Polynomial> inputs;
  Polynomial defect;
  /// Coefficient tuple, for checks that look at tensor entries directly.
  std::optional<IndexTuple> index;
};

/// Outcome of an identity check. passed == !witness.
struct Verdict {
  bool passed = true;
  std::optional<Witness> witness;
  /// Test tuples examined: all of them on a pass, up to and including the
  /// witness on a failure. Independent of worker count.
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_total = 0;
  /// Set when a pass was obtained on a ring with nilpotents, where the finite
  /// monomial test set is not known to be complete.
  bool heuristic_pass = false;
  /// alternation_check only: number of slots sharing the repeated argument in
  /// the witness tuple.
  std::optional<std::size_t> equal_slots;
};

struct CheckOptions {
  unsigned workers = 1;
};

}  // namespace nlb
