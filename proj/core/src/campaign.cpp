#include "nlb/campaign.hpp"

#include <random>

#include "nlb/checks.hpp"
#include "nlb/errors.hpp"
#include "nlb/multibracket.hpp"
#include "nlb/parallel.hpp"
#include "nlb/random.hpp"

namespace nlb {
namespace {

struct SampleOutcome {
  bool fi = false;
  bool skew = false;
  bool skewed_fi = false;
  bool skewed_skew = false;
  std::uint64_t tuples = 0;
};

void tally(CampaignCounts& c, bool fi, bool skew) {
  if (fi && skew) ++c.fi_pass_skew;
  if (fi && !skew) ++c.fi_pass_nonskew;
  if (!fi && skew) ++c.fi_fail_skew;
  if (!fi && !skew) ++c.fi_fail_nonskew;
}

void add_counts(std::vector<Detail>& out, const std::string& prefix, const CampaignCounts& c) {
  out.push_back({prefix + "fi_pass_skew", static_cast<std::int64_t>(c.fi_pass_skew)});
  out.push_back({prefix + "fi_pass_nonskew", static_cast<std::int64_t>(c.fi_pass_nonskew)});
  out.push_back({prefix + "fi_fail_skew", static_cast<std::int64_t>(c.fi_fail_skew)});
  out.push_back({prefix + "fi_fail_nonskew", static_cast<std::int64_t>(c.fi_fail_nonskew)});
}

Ring campaign_ring(std::size_t vars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return Ring(std::move(names));
}

}  // namespace

BracketTensor random_tensor(const Ring& ring, std::size_t arity, unsigned degree,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BracketTensor t(ring, arity);
  for (const auto& idx : all_index_tuples(ring.nvars(), arity)) {
    const bool present = uniform_int(rng, 0, 1) == 1;
    const std::uint64_t coeff_seed = rng();
    if (present) t.set(idx, random_poly(ring, degree, 3, coeff_seed));
  }
  return t;
}

std::uint64_t campaign_sample_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(seed, index);
}

CampaignResult theorem1_campaign(const CampaignConfig& cfg) {
  if (cfg.vars < 1) throw UsageError("campaign needs at least one variable");
  if (cfg.arity < 2 || cfg.arity > 4) throw UsageError("campaign arity must be in 2..4");
  if (cfg.samples < 1) throw UsageError("campaign needs at least one sample");
  if (!cfg.allow_large && (cfg.vars > Bounds::max_vars || cfg.degree > Bounds::max_degree))
    throw UsageError("campaign exceeds default bounds (vars <= 6, deg <= 3); pass --allow-large");

  const Ring ring = campaign_ring(cfg.vars);
  auto sample = [&](std::uint64_t i) {
    if (cfg.zero_first && i == 0) return BracketTensor(ring, cfg.arity);
    return random_tensor(ring, cfg.arity, cfg.degree, campaign_sample_seed(cfg.seed, i));
  };

  auto run = [&](std::uint64_t i) {
    const BracketTensor t = sample(i);
    SampleOutcome o;
    const Verdict fi = fi_check(t);
    o.fi = fi.passed;
    o.skew = is_skew(t).passed;
    const BracketTensor s = skew_part(t);
    const Verdict sfi = fi_check(s);
    o.skewed_fi = sfi.passed;
    o.skewed_skew = is_skew(s).passed;
    o.tuples = fi.tuples_checked + sfi.tuples_checked;
    return o;
  };

  const auto outcomes = parallel_map<SampleOutcome>(cfg.samples, cfg.workers, run);
  CampaignResult res;
  for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    tally(res.samples, o.fi, o.skew);
    tally(res.skewed, o.skewed_fi, o.skewed_skew);
    res.tuples_checked += o.tuples;
    if (!res.counterexample_index && ((o.fi && !o.skew) || (o.skewed_fi && !o.skewed_skew))) {
      res.counterexample_index = i;
      res.counterexample = sample(i);
    }
  }
  return res;
}

Report campaign_report(const CampaignConfig& cfg, const CampaignResult& result,
                       double duration_ms) {
  Report report;
  report.command = "campaign";
  report.subject = "skew-search";
  report.seed = cfg.seed;

  CheckRecord r;
  r.check = "skew-search";
  r.passed = result.passed();
  r.tuples_checked = result.tuples_checked;
  r.seed = cfg.seed;
  r.duration_ms = duration_ms;
  r.details = {
      {"vars", static_cast<std::int64_t>(cfg.vars)},
      {"arity", static_cast<std::int64_t>(cfg.arity)},
      {"deg", static_cast<std::int64_t>(cfg.degree)},
      {"samples", static_cast<std::int64_t>(cfg.samples)},
  };
  add_counts(r.details, "", result.samples);
  add_counts(r.details, "skewed_", result.skewed);
  if (result.counterexample) {
    const BracketTensor& t = *result.counterexample;
    r.witness_inputs.push_back("sample " + std::to_string(*result.counterexample_index));
    for (const auto& [idx, c] : t.coefficients())
      r.witness_inputs.push_back("coeff " + format_index(idx) + " : " + c.str(t.ring()));
    r.witness_defect = "fi_check passed while is_skew failed";
  }
  report.checks.push_back(std::move(r));
  return report;
}

}  // namespace nlb
