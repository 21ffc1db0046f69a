// nlb: command-line front end for the bracket verification engine.
//
//   nlb check <file> --select fi,skew,alternation,leibniz,preserve,preserve-linear,all
//   nlb algebroid <file> --select jacobi,square,roundtrip,probe,all --points N --seed S
//   nlb campaign --vars m --arity n --deg d --samples N --seed S
//   nlb catalog [name]
//
// <file> is a path or catalog:<name>. Exit status: 0 all checks passed,
// 1 some check found a violation, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlb/campaign.hpp"
#include "nlb/catalog.hpp"
#include "nlb/checks.hpp"
#include "nlb/errors.hpp"
#include "nlb/format.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

nlb::SpecFile load(const std::string& target) {
  constexpr std::string_view prefix = "catalog:";
  if (target.rfind(prefix, 0) == 0) return nlb::catalog(target.substr(prefix.size()));
  std::ifstream in(target);
  if (!in) throw nlb::UsageError("cannot open '" + target + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlb::parse_spec(buf.str());
  } catch (const nlb::ParseError& e) {
    throw nlb::ParseError(target + ":" + e.what(), e.line(), e.column());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic checker for n-ary brackets and Loday algebroids"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned workers = 1;
  bool no_timing = false;
  bool allow_large = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_flag("--no-timing", no_timing, "Emit zero durations for byte-stable reports");
  app.add_flag("--allow-large", allow_large, "Lift the default size bounds");

  std::string check_file;
  std::string check_select = "all";
  std::uint64_t check_seed = 1;
  std::uint64_t check_samples = 32;
  auto* check = app.add_subcommand("check", "Run identity checks on a tensor");
  check->add_option("file", check_file, "Spec file or catalog:<name>")->required();
  check->add_option("--select", check_select, "Comma-separated checks or 'all'");
  check->add_option("--seed", check_seed, "Seed for sampled checks");
  check->add_option("--samples", check_samples, "Leibniz samples");

  std::string alg_file;
  std::string alg_select = "all";
  std::uint64_t alg_points = 8;
  std::uint64_t alg_seed = 1;
  auto* algebroid = app.add_subcommand("algebroid", "Run algebroid checks");
  algebroid->add_option("file", alg_file, "Spec file or catalog:<name>")->required();
  algebroid->add_option("--select", alg_select, "Comma-separated checks or 'all'");
  algebroid->add_option("--points", alg_points, "Probe points");
  algebroid->add_option("--seed", alg_seed, "Seed for probes and random sections");

  nlb::CampaignConfig cfg;
  auto* campaign = app.add_subcommand("campaign", "Random search for non-skew FI brackets");
  campaign->add_option("--vars", cfg.vars, "Variable count m")->check(CLI::PositiveNumber);
  campaign->add_option("--arity", cfg.arity, "Bracket arity n")->check(CLI::Range(2, 4));
  campaign->add_option("--deg", cfg.degree, "Coefficient degree bound d");
  campaign->add_option("--samples", cfg.samples, "Sample count N")->check(CLI::PositiveNumber);
  campaign->add_option("--seed", cfg.seed, "Campaign seed");
  campaign->add_flag("--zero-first", cfg.zero_first, "Use the zero tensor as sample 0");

  std::string entry;
  auto* catalog = app.add_subcommand("catalog", "List or print built-in examples");
  catalog->add_option("name", entry, "Entry to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool json = format == "json";
  const nlb::RenderOptions render{!no_timing};
  try {
    if (catalog->parsed()) {
      if (entry.empty()) {
        const auto names = nlb::catalog_names();
        if (json) {
          std::cout << nlohmann::ordered_json{{"catalog", names}}.dump(2) << "\n";
        } else {
          for (const auto& n : names) std::cout << n << "\n";
        }
      } else {
        const std::string text = nlb::print_spec(nlb::catalog(entry));
        if (json) {
          std::cout << nlohmann::ordered_json{{"name", entry}, {"spec", text}}.dump(2) << "\n";
        } else {
          std::cout << text;
        }
      }
      return kPass;
    }

    nlb::Report report;
    if (check->parsed()) {
      const auto which = nlb::parse_tensor_selectors(check_select);
      const nlb::SpecFile spec = load(check_file);
      nlb::RunOptions opts;
      opts.workers = workers;
      opts.seed = check_seed;
      opts.leibniz_samples = check_samples;
      opts.allow_large = allow_large;
      report = nlb::run_tensor_checks(spec, which, opts, check_file);
    } else if (algebroid->parsed()) {
      const auto which = nlb::parse_algebroid_selectors(alg_select);
      const nlb::SpecFile spec = load(alg_file);
      nlb::RunOptions opts;
      opts.workers = workers;
      opts.seed = alg_seed;
      opts.points = alg_points;
      opts.allow_large = allow_large;
      report = nlb::run_algebroid_checks(spec, which, opts, alg_file);
    } else {
      cfg.workers = workers;
      cfg.allow_large = allow_large;
      const auto start = std::chrono::steady_clock::now();
      const nlb::CampaignResult res = nlb::theorem1_campaign(cfg);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report = nlb::campaign_report(cfg, res, ms);
    }
    std::cout << (json ? nlb::render_json(report, render) : nlb::render_text(report, render));
    return report.passed() ? kPass : kViolation;
  } catch (const nlb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const nlb::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const nlb::StructuralError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const nlb::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  }
  return kUsage;
}
