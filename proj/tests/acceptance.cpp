// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nlb/algebroid.hpp"
#include "nlb/campaign.hpp"
#include "nlb/catalog.hpp"
#include "nlb/checks.hpp"
#include "nlb/format.hpp"
#include "nlb/hamgeo.hpp"
#include "nlb/multibracket.hpp"
#include "nlb/random.hpp"
#include "nlb/report.hpp"

using namespace nlb;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Polynomial var(const Ring& r, const std::string& text) { return parse_polynomial(text, r); }

Polynomial br2(const BracketTensor& t, const Polynomial& f, const Polynomial& g) {
  std::vector<Polynomial> args{f, g};
  return bracket_eval(t, args);
}

Outcome example_one() {
  Outcome out;
  auto t = *catalog("example1").tensor;
  const Ring& r = t.ring();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Polynomial got = br2(t, Polynomial::variable(3, i), Polynomial::variable(3, j));
      std::string want = "0";
      if (i == 0 && j == 0) want = "x2";
      if (i == 0 && j == 2) want = "x3";
      if (i == 2 && j == 0) want = "-x3";
      out.require(got == var(r, want), "bracket of basis pair " + format_index({i, j}) + " = " + got.str(r));
    }
  out.require(linear_preservation_check(t).passed, "linear preservation failed");
  return out;
}

Outcome contrapositive() {
  Outcome out;
  auto t = *catalog("example1").tensor;
  const Ring& r = t.ring();
  out.require(!fi_check(t).passed, "fi_check passed");
  std::vector<Polynomial> fs{var(r, "x1^2")}, gs{var(r, "x1"), var(r, "x1")};
  Polynomial d = fi_defect(t, fs, gs);
  out.require(d == var(r, "-4*x2^2"), "fi defect " + d.str(r));
  auto skew = is_skew(t);
  out.require(!skew.passed && skew.witness->index == IndexTuple{0, 0}, "skew witness is not (1,1)");
  return out;
}

Outcome nilpotent_symmetric() {
  Outcome out;
  auto t = *catalog("nilpotent-remark").tensor;
  const Ring& r = t.ring();
  out.require(fi_check(t).passed, "fi_check failed");
  // every nested bracket on the test set vanishes
  auto ms = standard_monomials(r, 2);
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& c : ms) {
        Polynomial f = Polynomial::term(a, 1), g = Polynomial::term(b, 1), h = Polynomial::term(c, 1);
        out.require(br2(t, f, br2(t, g, h)).is_zero(), "nonzero nested bracket");
      }
  out.require(leibniz_sampling(t, 64, 7).passed, "Leibniz sampling failed");
  auto skew = is_skew(t);
  out.require(!skew.passed && skew.witness->index == IndexTuple{1, 1} && skew.witness->defect == var(r, "x"),
              "skew witness is not x at (2,2)");
  return out;
}

Outcome campaign() {
  Outcome out;
  CampaignConfig cfg;
  cfg.vars = 3;
  cfg.arity = 2;
  cfg.degree = 1;
  cfg.samples = 500;
  cfg.seed = 7;
  auto res = theorem1_campaign(cfg);
  out.require(res.samples.fi_pass_nonskew == 0 && res.skewed.fi_pass_nonskew == 0,
              "forbidden bucket is nonempty");
  out.require(fi_check(*catalog("so3").tensor).passed, "so3 fails fi");
  out.require(fi_check(*catalog("nambu3").tensor).passed, "nambu3 fails fi");
  out.note = std::to_string(res.samples.fi_fail_nonskew) + " raw non-skew failures, " +
             std::to_string(res.skewed.fi_pass_skew) + " skewed passes";
  return out;
}

Outcome preservation_equivalence() {
  Outcome out;
  std::vector<std::pair<std::string, BracketTensor>> cases;
  for (const auto& name : catalog_names())
    if (auto spec = catalog(name); spec.tensor) cases.emplace_back(name, *spec.tensor);
  Ring r({"x1", "x2", "x3"});
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto t = random_tensor(r, 2 + i % 2, static_cast<unsigned>((i / 2) % 2), campaign_sample_seed(1234, i));
    cases.emplace_back("random " + std::to_string(i), t);
    cases.emplace_back("random " + std::to_string(i) + " skewed", skew_part(t));
  }
  std::size_t passing = 0;
  for (const auto& [name, t] : cases) {
    bool fi = fi_check(t).passed;
    passing += fi;
    out.require(fi == preservation_check(t).passed, "verdicts differ on " + name);
  }
  if (out.ok) out.note = std::to_string(cases.size()) + " tensors, " + std::to_string(passing) + " passing";
  return out;
}

Outcome cross_identity() {
  Outcome out;
  for (const char* name : {"so3", "example1"}) {
    auto t = *catalog(name).tensor;
    const Ring& r = t.ring();
    for (std::uint64_t s = 0; s < 100; ++s) {
      std::vector<Polynomial> in;
      for (std::uint64_t k = 0; k < 3; ++k) in.push_back(random_poly(r, 2, 4, mix_seed(s, k)));
      std::span<const Polynomial> all(in);
      auto fs = all.first(1), gs = all.subspan(1);
      Polynomial lhs = polarization_defect(t, 0, fs, gs) - multiply(fs[0], fi_defect(t, fs, gs), r);
      out.require(lhs == key_identity_defect(t, 0, fs, gs), std::string("identity broken on ") + name);
    }
  }
  // key identity and alternation on fi-passing tensors over a free ring
  std::vector<BracketTensor> passing{*catalog("so3").tensor, *catalog("nambu3").tensor};
  Ring r({"x1", "x2", "x3"});
  for (std::uint64_t i = 0; passing.size() < 6 && i < 200; ++i) {
    auto t = skew_part(random_tensor(r, 2, 1, campaign_sample_seed(99, i)));
    if (!t.is_zero() && fi_check(t).passed) passing.push_back(t);
  }
  for (const auto& t : passing) {
    std::size_t n = t.arity();
    out.require(alternation_check(t).passed, "alternation fails on an fi-passing tensor");
    auto ms = standard_monomials(t.ring(), n == 2 ? 2 : 1);
    std::vector<std::size_t> idx(2 * n - 1, 0);
    while (true) {
      std::vector<Polynomial> in;
      for (auto k : idx) in.push_back(Polynomial::term(ms[k], 1));
      std::span<const Polynomial> all(in);
      for (std::size_t i = 0; i + 1 < n; ++i)
        out.require(key_identity_defect(t, i, all.first(n - 1), all.subspan(n - 1)).is_zero(),
                    "key identity nonzero on an fi-passing tensor");
      std::size_t p = idx.size();
      while (p > 0 && ++idx[p - 1] == ms.size()) idx[--p] = 0;
      if (p == 0) break;
    }
  }
  if (out.ok) out.note = std::to_string(passing.size()) + " fi-passing tensors";
  return out;
}

Outcome roundtrip() {
  Outcome out;
  std::vector<std::pair<std::string, AlgebroidSpec>> cases{
      {"tangent-algebroid", *catalog("tangent-algebroid").algebroid},
      {"example1-algebroid", *catalog("example1-algebroid").algebroid}};
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::size_t m = 1 + i % 2, rank = 1 + (i / 2) % 3;
    Ring base = m == 1 ? Ring({"t"}) : Ring({"x1", "x2"});
    cases.emplace_back("random " + std::to_string(i), random_algebroid(base, rank, 1, mix_seed(77, i)));
  }
  std::uint64_t identities = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    auto res = linear_tensor_roundtrip(cases[c].second, 20, mix_seed(5, c));
    identities += res.identities_checked;
    out.require(res.passed, cases[c].first + ": " + res.failure);
  }
  if (out.ok) out.note = std::to_string(identities) + " identities";
  return out;
}

Outcome algebroid_anchors() {
  Outcome out;
  auto e1 = *catalog("example1-algebroid").algebroid;
  out.require(jacobi_check(e1).passed, "example1-algebroid fails Jacobi");
  out.require(bracket_sections(e1, e1.basis(0), e1.basis(0)) == e1.basis(1), "[e1,e1] != e2");

  Ring t({"t"});
  AlgebroidSpec hand(t, 1);
  hand.set_structure(0, 0, 0, Polynomial::constant(1, 1));
  hand.set_anchor(AnchorSide::left, 0, 0, Polynomial::constant(1, 1));
  hand.set_anchor(AnchorSide::right, 0, 0, Polynomial::constant(1, 1));
  auto pts = random_points(1, 8, 1);
  std::vector<std::pair<Section, Section>> pairs{{hand.basis(0), hand.basis(0, Polynomial::variable(1, 0))}};
  auto rep = theorem3_probe(hand, pts, pairs);
  out.require(!rep.jacobi.passed && rep.jacobi.inputs.size() == 3 && rep.jacobi.defect &&
                  !rep.jacobi.defect->is_zero(),
              "hand-built spec has no recorded Jacobi witness");

  auto tan = *catalog("tangent-algebroid").algebroid;
  for (const auto& row : anchor_gap(tan))
    for (const auto& p : row) out.require(p.is_zero(), "tangent anchor gap nonzero");
  out.require(square_bracket_check(tan).passed, "tangent [[X,X],Y] check failed");
  for (const auto& x : monomial_sections(tan, 2))
    out.require(bracket_sections(tan, x, x).is_zero(), "tangent [X,X] nonzero");
  for (std::uint64_t s = 0; s < 20; ++s) {
    Section x = random_section(tan, 3, s);
    out.require(bracket_sections(tan, x, x).is_zero(), "tangent [X,X] nonzero on a random section");
  }
  auto tpts = random_points(2, 8, 2);
  std::vector<std::pair<Section, Section>> tpairs{{random_section(tan, 2, 1), random_section(tan, 2, 2)}};
  auto trep = theorem3_probe(tan, tpts, tpairs);
  out.require(trep.violations == 0 && trep.consistent, "tangent probe reports a violation");
  return out;
}

Outcome determinism() {
  Outcome out;
  RenderOptions fixed{false};
  auto tensor_checks = parse_tensor_selectors("all");
  auto algebroid_checks = parse_algebroid_selectors("all");
  for (const auto& name : catalog_names()) {
    auto spec = catalog(name);
    std::string text = print_spec(spec);
    out.require(parse_spec(text) == spec && print_spec(parse_spec(text)) == text, name + " does not round-trip");
    std::vector<std::string> renders;
    for (unsigned w : {1u, 2u, 4u}) {
      RunOptions opts;
      opts.workers = w;
      opts.seed = 7;
      Report rep = spec.tensor ? run_tensor_checks(spec, tensor_checks, opts, name)
                               : run_algebroid_checks(spec, algebroid_checks, opts, name);
      renders.push_back(render_json(rep, fixed));
    }
    out.require(renders[0] == renders[1] && renders[1] == renders[2], name + " report depends on workers");
  }
  std::vector<std::string> campaigns;
  for (unsigned w : {1u, 3u}) {
    CampaignConfig cfg;
    cfg.samples = 100;
    cfg.seed = 7;
    cfg.workers = w;
    campaigns.push_back(render_json(campaign_report(cfg, theorem1_campaign(cfg), 0), fixed));
  }
  out.require(campaigns[0] == campaigns[1], "campaign report depends on workers");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Example 1 reproduction", 1, example_one},
      {2, "non-skew Example 1 violates the Filippov identity", 1, contrapositive},
      {3, "symmetric bracket on a ring with nilpotents", 1, nilpotent_symmetric},
      {4, "skew-symmetry campaign (500 samples, seed 7)", 300, campaign},
      {5, "Filippov identity iff Hamiltonian fields preserve the tensor", 600, preservation_equivalence},
      {6, "polarization cross-identity", 60, cross_identity},
      {7, "algebroid / linear dual tensor correspondence", 120, roundtrip},
      {8, "anchors and skew-symmetry of algebroid brackets", 60, algebroid_anchors},
      {9, "determinism across worker counts and format round trip", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.budget_s) out = {false, "over time budget of " + std::to_string(c.budget_s) + " s"};
    failures += !out.ok;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", c.id, out.ok ? "PASS" : "FAIL", c.title, secs,
                out.note.empty() ? "" : "  ", out.note.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
