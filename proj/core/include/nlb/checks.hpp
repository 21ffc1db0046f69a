#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlb/format.hpp"
#include "nlb/report.hpp"

namespace nlb {

enum class TensorCheck { fi, skew, alternation, leibniz, preserve, preserve_linear };
enum class AlgebroidCheck { jacobi, square, roundtrip, probe };

/// Comma-separated selector list; "all" expands to every check. Throws
/// UsageError on unknown names.
std::vector<TensorCheck> parse_tensor_selectors(std::string_view csv);
std::vector<AlgebroidCheck> parse_algebroid_selectors(std::string_view csv);

std::string_view check_name(TensorCheck c);
std::string_view check_name(AlgebroidCheck c);

/// Default desk-scale bounds; raised by allow_large.
struct Bounds {
  static constexpr std::size_t max_vars = 6;
  static constexpr std::size_t max_arity = 4;
  static constexpr unsigned max_degree = 3;
};

struct RunOptions {
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::uint64_t leibniz_samples = 32;
  std::uint64_t points = 8;
  std::uint64_t section_pairs = 4;
  bool allow_large = false;
};

/// Runs tensor checks; UsageError if the file has no tensor block or exceeds
/// the default bounds.
Report run_tensor_checks(const SpecFile& spec, std::span<const TensorCheck> which,
                         const RunOptions& opts, std::string subject = "");

/// Runs algebroid checks; UsageError if the file has no algebroid block.
Report run_algebroid_checks(const SpecFile& spec, std::span<const AlgebroidCheck> which,
                            const RunOptions& opts, std::string subject = "");

/// Outcome of the dual-tensor correspondence check.
struct RoundtripResult {
  bool passed = true;
  std::uint64_t identities_checked = 0;
  /// Which identity failed: "roundtrip", "bracket", "left-anchor", "right-anchor".
  std::string failure;
  std::vector<std::string> witness_inputs;
  std::optional<std::string> witness_defect;
};

/// Checks from_linear_tensor(to_linear_tensor(a)) == a, then
/// iota_[X,Y] = {iota_X, iota_Y} over all pairs of degree <= 1 monomial
/// sections plus `random_pairs` seeded polynomial pairs, then
/// {iota_X, f} = a_l(X)(f) and {f, iota_Y} = -a_r(Y)(f) for monomial sections
/// and coordinate functions f. Stops at the first failure.
RoundtripResult linear_tensor_roundtrip(const AlgebroidSpec& a, std::uint64_t random_pairs,
                                        std::uint64_t seed);

/// Seeded rational probe points with small numerators and denominators.
std::vector<std::vector<Rational>> random_points(std::size_t dim, std::uint64_t count,
                                                 std::uint64_t seed);

}  // namespace nlb
