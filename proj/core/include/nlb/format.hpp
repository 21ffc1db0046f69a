#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nlb/algebroid.hpp"
#include "nlb/polynomial.hpp"
#include "nlb/ring.hpp"
#include "nlb/tensor.hpp"

namespace nlb {

/// Parsed input file: one ring block, optionally a tensor block and an
/// algebroid block.
///
///   ring { vars: x y; nilpotent: x^2; }
///   tensor { arity: 2; coeff 2 2 : x; }
///   algebroid { base_vars: t; rank: 3; c 1 1 2 : 1; anchor_left 1 1 : t; }
///
/// Indices in the text are 1-based. `#` starts a comment running to the end of
/// the line.
struct SpecFile {
  Ring ring;
  std::optional<BracketTensor> tensor;
  std::optional<AlgebroidSpec> algebroid;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws ParseError (with 1-based line and column) on malformed input,
/// undeclared variables, out-of-range indices and duplicate entries.
SpecFile parse_spec(std::string_view source);

/// Canonical text form; parse_spec(print_spec(s)) == s.
std::string print_spec(const SpecFile& spec);

/// Parses a standalone polynomial over ring (same expression grammar).
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace nlb
