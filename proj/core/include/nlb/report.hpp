#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlb/algebroid.hpp"
#include "nlb/ring.hpp"
#include "nlb/verdict.hpp"

namespace nlb {

using DetailValue = std::variant<bool, std::int64_t, std::string>;

struct Detail {
  std::string key;
  DetailValue value;

  friend bool operator==(const Detail&, const Detail&) = default;
};

/// One check in a report. Every record carries the stable field set
/// {check, passed, witness_inputs, witness_defect, tuples_checked, seed,
/// duration_ms}; details hold check-specific extras in insertion order.
struct CheckRecord {
  std::string check;
  bool passed = true;
  std::vector<std::string> witness_inputs;
  std::optional<std::string> witness_defect;
  std::uint64_t tuples_checked = 0;
  std::uint64_t seed = 0;
  double duration_ms = 0;
  std::vector<Detail> details;
};

struct Report {
  std::string command;
  std::string subject;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::vector<Detail> summary;

  bool passed() const;
  /// Orders checks by name.
  void canonicalize();
};

struct RenderOptions {
  /// When false, durations are emitted as 0 so that reruns are byte-identical.
  bool timing = true;
};

std::string render_json(const Report& report, const RenderOptions& opts = {});
std::string render_text(const Report& report, const RenderOptions& opts = {});

/// Record for a polynomial-level verdict; polynomials are printed over ring.
CheckRecord make_record(std::string check, const Verdict& v, const Ring& ring, std::uint64_t seed);

/// Record for a section-level verdict; sections are printed over the base.
CheckRecord make_record(std::string check, const SectionVerdict& v, const Ring& base,
                        std::uint64_t seed);

}  // namespace nlb
