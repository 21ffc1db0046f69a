#include "nlb/checks.hpp"

#include <chrono>
#include <random>

#include "nlb/errors.hpp"
#include "nlb/hamgeo.hpp"
#include "nlb/multibracket.hpp"
#include "nlb/random.hpp"

namespace nlb {
namespace {

constexpr std::pair<TensorCheck, std::string_view> kTensorChecks[] = {
    {TensorCheck::fi, "fi"},
    {TensorCheck::skew, "skew"},
    {TensorCheck::alternation, "alternation"},
    {TensorCheck::leibniz, "leibniz"},
    {TensorCheck::preserve, "preserve"},
    {TensorCheck::preserve_linear, "preserve-linear"},
};

constexpr std::pair<AlgebroidCheck, std::string_view> kAlgebroidChecks[] = {
    {AlgebroidCheck::jacobi, "jacobi"},
    {AlgebroidCheck::square, "square"},
    {AlgebroidCheck::roundtrip, "roundtrip"},
    {AlgebroidCheck::probe, "probe"},
};

template <class E, std::size_t N>
std::vector<E> parse_selectors(std::string_view csv, const std::pair<E, std::string_view> (&table)[N]) {
  std::vector<E> out;
  auto push = [&](E e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t stop = std::min(csv.find(',', start), csv.size());
    const std::string_view item = csv.substr(start, stop - start);
    if (item == "all") {
      for (const auto& [e, name] : table) push(e);
    } else {
      bool found = false;
      for (const auto& [e, name] : table) {
        if (name == item) {
          push(e);
          found = true;
        }
      }
      if (!found) throw UsageError("unknown check '" + std::string(item) + "'");
    }
    start = stop + 1;
  }
  return out;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join_values(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += ", ";
    s += v[k].str();
  }
  return s + ")";
}

}  // namespace

std::vector<TensorCheck> parse_tensor_selectors(std::string_view csv) {
  return parse_selectors(csv, kTensorChecks);
}

std::vector<AlgebroidCheck> parse_algebroid_selectors(std::string_view csv) {
  return parse_selectors(csv, kAlgebroidChecks);
}

std::string_view check_name(TensorCheck c) {
  for (const auto& [e, name] : kTensorChecks)
    if (e == c) return name;
  return "?";
}

std::string_view check_name(AlgebroidCheck c) {
  for (const auto& [e, name] : kAlgebroidChecks)
    if (e == c) return name;
  return "?";
}

Report run_tensor_checks(const SpecFile& spec, std::span<const TensorCheck> which,
                         const RunOptions& opts, std::string subject) {
  if (!spec.tensor) throw UsageError("input has no tensor block");
  const BracketTensor& t = *spec.tensor;
  const Ring& ring = t.ring();
  if (!opts.allow_large && (ring.nvars() > Bounds::max_vars || t.arity() > Bounds::max_arity))
    throw UsageError("tensor exceeds default bounds (vars <= 6, arity <= 4); pass --allow-large");

  const CheckOptions copts{opts.workers};
  Report report;
  report.command = "check";
  report.subject = std::move(subject);
  report.seed = opts.seed;
  for (const auto c : which) {
    Stopwatch sw;
    Verdict v;
    switch (c) {
      case TensorCheck::fi: v = fi_check(t, copts); break;
      case TensorCheck::skew: v = is_skew(t); break;
      case TensorCheck::alternation: v = alternation_check(t, copts); break;
      case TensorCheck::leibniz: v = leibniz_sampling(t, opts.leibniz_samples, opts.seed); break;
      case TensorCheck::preserve: v = preservation_check(t, copts); break;
      case TensorCheck::preserve_linear: v = linear_preservation_check(t, copts); break;
    }
    CheckRecord r = make_record(std::string(check_name(c)), v, ring, opts.seed);
    r.duration_ms = sw.elapsed_ms();
    report.checks.push_back(std::move(r));
  }
  report.canonicalize();
  return report;
}

RoundtripResult linear_tensor_roundtrip(const AlgebroidSpec& a, std::uint64_t random_pairs,
                                        std::uint64_t seed) {
  RoundtripResult res;
  const Ring& base = a.base();
  const DualTensor dual = to_linear_tensor(a);
  const Ring& dring = dual.tensor.ring();

  ++res.identities_checked;
  if (!(from_linear_tensor(dual) == a)) {
    res.passed = false;
    res.failure = "roundtrip";
    return res;
  }

  auto bracket_identity = [&](const Section& x, const Section& y) {
    ++res.identities_checked;
    const std::vector<Polynomial> args{iota(x, dring), iota(y, dring)};
    Polynomial d = iota(bracket_sections(a, x, y), dring) - bracket_eval(dual.tensor, args);
    if (d.is_zero()) return true;
    res.passed = false;
    res.failure = "bracket";
    res.witness_inputs = {x.str(base), y.str(base)};
    res.witness_defect = d.str(dring);
    return false;
  };

  const auto secs = monomial_sections(a, 1);
  for (const auto& x : secs)
    for (const auto& y : secs)
      if (!bracket_identity(x, y)) return res;
  for (std::uint64_t k = 0; k < random_pairs; ++k) {
    const Section x = random_section(a, 2, mix_seed(seed, 2 * k));
    const Section y = random_section(a, 2, mix_seed(seed, 2 * k + 1));
    if (!bracket_identity(x, y)) return res;
  }

  for (const auto& x : secs) {
    for (std::size_t u = 0; u < base.nvars(); ++u) {
      const Polynomial f = Polynomial::variable(base.nvars(), u);
      const Polynomial lf = lift_to_dual(f, dring);
      const Polynomial ix = iota(x, dring);
      ++res.identities_checked;
      const std::vector<Polynomial> left_args{ix, lf};
      Polynomial dl = bracket_eval(dual.tensor, left_args) -
                      lift_to_dual(a.anchor_apply(AnchorSide::left, x, f), dring);
      if (!dl.is_zero()) {
        res.passed = false;
        res.failure = "left-anchor";
        res.witness_inputs = {x.str(base), f.str(base)};
        res.witness_defect = dl.str(dring);
        return res;
      }
      ++res.identities_checked;
      const std::vector<Polynomial> right_args{lf, ix};
      Polynomial dr = bracket_eval(dual.tensor, right_args) +
                      lift_to_dual(a.anchor_apply(AnchorSide::right, x, f), dring);
      if (!dr.is_zero()) {
        res.passed = false;
        res.failure = "right-anchor";
        res.witness_inputs = {f.str(base), x.str(base)};
        res.witness_defect = dr.str(dring);
        return res;
      }
    }
  }
  return res;
}

std::vector<std::vector<Rational>> random_points(std::size_t dim, std::uint64_t count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Rational> p;
    for (std::size_t u = 0; u < dim; ++u)
      p.emplace_back(uniform_int(rng, -5, 5), uniform_int(rng, 1, 3));
    out.push_back(std::move(p));
  }
  return out;
}

Report run_algebroid_checks(const SpecFile& spec, std::span<const AlgebroidCheck> which,
                            const RunOptions& opts, std::string subject) {
  if (!spec.algebroid) throw UsageError("input has no algebroid block");
  const AlgebroidSpec& a = *spec.algebroid;
  const Ring& base = a.base();
  if (!opts.allow_large && (base.nvars() > Bounds::max_vars || a.rank() > Bounds::max_vars))
    throw UsageError("algebroid exceeds default bounds (base vars, rank <= 6); pass --allow-large");

  const CheckOptions copts{opts.workers};
  Report report;
  report.command = "algebroid";
  report.subject = std::move(subject);
  report.seed = opts.seed;

  for (const auto c : which) {
    Stopwatch sw;
    CheckRecord r;
    switch (c) {
      case AlgebroidCheck::jacobi:
        r = make_record("jacobi", jacobi_check(a, copts), base, opts.seed);
        break;
      case AlgebroidCheck::square:
        r = make_record("square", square_bracket_check(a, copts), base, opts.seed);
        break;
      case AlgebroidCheck::roundtrip: {
        const RoundtripResult rt = linear_tensor_roundtrip(a, 20, opts.seed);
        r.check = "roundtrip";
        r.passed = rt.passed;
        r.tuples_checked = rt.identities_checked;
        r.seed = opts.seed;
        r.witness_inputs = rt.witness_inputs;
        r.witness_defect = rt.witness_defect;
        if (!rt.passed) r.details.push_back({"failure", rt.failure});
        break;
      }
      case AlgebroidCheck::probe: {
        const auto points = random_points(base.nvars(), opts.points, opts.seed);
        std::vector<std::pair<Section, Section>> pairs;
        for (std::size_t i = 0; i < a.rank(); ++i) pairs.emplace_back(a.basis(i), a.basis((i + 1) % a.rank()));
        for (std::uint64_t k = 0; k < opts.section_pairs; ++k)
          pairs.emplace_back(random_section(a, 1, mix_seed(opts.seed, 1000 + 2 * k)),
                             random_section(a, 1, mix_seed(opts.seed, 1001 + 2 * k)));
        const Theorem3Report t3 = theorem3_probe(a, points, pairs, copts);
        std::int64_t vanishing = 0;
        for (const auto& p : t3.points) vanishing += p.anchor_vanishing ? 1 : 0;
        r.check = "probe";
        r.seed = opts.seed;
        r.tuples_checked = t3.points.size() * pairs.size();
        r.passed = t3.jacobi.passed && t3.violations == 0;
        if (!t3.jacobi.passed) {
          for (const auto& s : t3.jacobi.inputs) r.witness_inputs.push_back(s.str(base));
          r.witness_defect = t3.jacobi.defect->str(base);
        } else if (t3.first_violation) {
          const auto& fv = *t3.first_violation;
          r.witness_inputs.push_back("point " + join_values(t3.points[fv.point_index].point));
          for (const auto& s : fv.sections) r.witness_inputs.push_back(s.str(base));
          r.witness_defect = fv.value.empty() ? "anchor gap" : join_values(fv.value);
        }
        r.details = {
            {"jacobi_passed", t3.jacobi.passed},
            {"points", static_cast<std::int64_t>(t3.points.size())},
            {"anchor_vanishing_points", vanishing},
            {"violations", static_cast<std::int64_t>(t3.violations)},
            {"consistent", t3.consistent},
        };
        break;
      }
    }
    r.duration_ms = sw.elapsed_ms();
    report.checks.push_back(std::move(r));
  }
  report.canonicalize();
  return report;
}

}  // namespace nlb
