#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "nlb/report.hpp"
#include "nlb/tensor.hpp"

namespace nlb {

struct CampaignConfig {
  std::size_t vars = 3;
  std::size_t arity = 2;
  unsigned degree = 1;
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Replace sample 0 with the zero tensor.
  bool zero_first = false;
  bool allow_large = false;
};

/// Verdict buckets. On free rings fi_pass_nonskew must stay empty.
struct CampaignCounts {
  std::uint64_t fi_pass_skew = 0;
  std::uint64_t fi_pass_nonskew = 0;
  std::uint64_t fi_fail_skew = 0;
  std::uint64_t fi_fail_nonskew = 0;

  friend bool operator==(const CampaignCounts&, const CampaignCounts&) = default;
};

struct CampaignResult {
  CampaignCounts samples;
  /// The same counts for skew_part() of every sample.
  CampaignCounts skewed;
  std::uint64_t tuples_checked = 0;
  /// First sample (by index) landing in the forbidden bucket.
  std::optional<std::uint64_t> counterexample_index;
  std::optional<BracketTensor> counterexample;

  bool passed() const { return samples.fi_pass_nonskew == 0 && skewed.fi_pass_nonskew == 0; }
};

/// Every index tuple gets a coefficient with probability 1/2, drawn by
/// random_poly(degree, bound 3). Determined by seed.
BracketTensor random_tensor(const Ring& ring, std::size_t arity, unsigned degree,
                            std::uint64_t seed);

/// Seed of sample i in a campaign.
std::uint64_t campaign_sample_seed(std::uint64_t seed, std::uint64_t index);

/// Samples random tensors on a free ring, classifies each by (fi_check,
/// is_skew) and does the same for its skew-symmetrization. Throws UsageError
/// on invalid or out-of-bounds configurations.
CampaignResult theorem1_campaign(const CampaignConfig& cfg);

Report campaign_report(const CampaignConfig& cfg, const CampaignResult& result, double duration_ms);

}  // namespace nlb
