#include "nlb/algebroid.hpp"

#include <algorithm>

#include "nlb/errors.hpp"
#include "nlb/parallel.hpp"
#include "nlb/random.hpp"

namespace nlb {
namespace {

AnchorMatrix zero_matrix(std::size_t m, std::size_t r) {
  return AnchorMatrix(m, std::vector<Polynomial>(r, Polynomial(m)));
}

bool values_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

Section add(Section a, const Section& b) {
  for (std::size_t k = 0; k < a.components.size(); ++k) a.components[k] += b.components[k];
  return a;
}

}  // namespace

bool Section::is_zero() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::string Section::str(const Ring& base) const {
  std::string s = "(";
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k > 0) s += ", ";
    s += components[k].str(base);
  }
  return s + ")";
}

AlgebroidSpec::AlgebroidSpec(Ring base, std::size_t rank)
    : base_(std::move(base)), rank_(rank) {
  if (!base_.is_free()) throw UnsupportedError("algebroid base ring must be free");
  if (rank_ < 1) throw StructuralError("algebroid rank must be >= 1");
  left_ = zero_matrix(base_.nvars(), rank_);
  right_ = zero_matrix(base_.nvars(), rank_);
}

void AlgebroidSpec::set_structure(std::size_t i, std::size_t j, std::size_t k,
                                  const Polynomial& value) {
  if (i >= rank_ || j >= rank_ || k >= rank_)
    throw StructuralError("structure index out of range");
  require_ring(value, base_, "set_structure");
  if (value.is_zero()) {
    structure_.erase({i, j, k});
  } else {
    structure_.insert_or_assign({i, j, k}, value);
  }
}

Polynomial AlgebroidSpec::structure(std::size_t i, std::size_t j, std::size_t k) const {
  const auto it = structure_.find({i, j, k});
  return it == structure_.end() ? Polynomial(base_.nvars()) : it->second;
}

void AlgebroidSpec::set_anchor(AnchorSide side, std::size_t u, std::size_t i,
                               const Polynomial& value) {
  if (u >= base_.nvars() || i >= rank_) throw StructuralError("anchor index out of range");
  require_ring(value, base_, "set_anchor");
  (side == AnchorSide::left ? left_ : right_)[u][i] = value;
}

Section AlgebroidSpec::zero_section() const {
  return Section{std::vector<Polynomial>(rank_, Polynomial(base_.nvars()))};
}

Section AlgebroidSpec::basis(std::size_t i, const Polynomial& f) const {
  if (i >= rank_) throw StructuralError("basis index out of range");
  Section s = zero_section();
  s.components[i] = f;
  return s;
}

Section AlgebroidSpec::basis(std::size_t i) const {
  return basis(i, Polynomial::constant(base_.nvars(), 1));
}

void AlgebroidSpec::check_section(const Section& s, const char* what) const {
  if (s.components.size() != rank_)
    throw StructuralError(std::string(what) + ": section rank " +
                          std::to_string(s.components.size()) + " does not match " +
                          std::to_string(rank_));
  for (const auto& c : s.components) require_ring(c, base_, what);
}

Polynomial AlgebroidSpec::anchor_apply(AnchorSide side, const Section& x,
                                       const Polynomial& f) const {
  check_section(x, "anchor_apply");
  const AnchorMatrix& a = anchor(side);
  Polynomial out(base_.nvars());
  for (std::size_t u = 0; u < base_.nvars(); ++u) {
    const Polynomial df = derive(f, u);
    if (df.is_zero()) continue;
    Polynomial field(base_.nvars());
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a[u][i].is_zero() || x.components[i].is_zero()) continue;
      field += multiply(a[u][i], x.components[i], base_);
    }
    out += multiply(field, df, base_);
  }
  return out;
}

Section bracket_sections(const AlgebroidSpec& a, const Section& x, const Section& y) {
  const Ring& base = a.base();
  if (x.components.size() != a.rank() || y.components.size() != a.rank())
    throw StructuralError("bracket_sections: rank mismatch");
  Section out = a.zero_section();
  for (const auto& [key, c] : a.structure_constants()) {
    const auto& [i, j, k] = key;
    if (x.components[i].is_zero() || y.components[j].is_zero()) continue;
    out.components[k] +=
        multiply(multiply(x.components[i], y.components[j], base), c, base);
  }
  for (std::size_t k = 0; k < a.rank(); ++k) {
    out.components[k] += a.anchor_apply(AnchorSide::left, x, y.components[k]);
    out.components[k] -= a.anchor_apply(AnchorSide::right, y, x.components[k]);
  }
  return out;
}

Section jacobi_defect(const AlgebroidSpec& a, const Section& x, const Section& y,
                      const Section& z) {
  Section d = bracket_sections(a, x, bracket_sections(a, y, z));
  const Section xy_z = bracket_sections(a, bracket_sections(a, x, y), z);
  const Section y_xz = bracket_sections(a, y, bracket_sections(a, x, z));
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    d.components[k] -= xy_z.components[k];
    d.components[k] -= y_xz.components[k];
  }
  return d;
}

std::vector<Section> monomial_sections(const AlgebroidSpec& a, unsigned max_degree) {
  std::vector<Section> out;
  const auto monos = standard_monomials(a.base(), max_degree);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (const auto& m : monos) out.push_back(a.basis(i, Polynomial::term(m, 1)));
  return out;
}

SectionVerdict jacobi_check(const AlgebroidSpec& a, const CheckOptions& opts) {
  const auto secs = monomial_sections(a, 1);
  const std::uint64_t b = secs.size();
  const std::uint64_t total = b * b * b;
  auto probe = [&](std::uint64_t k) -> std::optional<Section> {
    Section d = jacobi_defect(a, secs[k / (b * b)], secs[(k / b) % b], secs[k % b]);
    if (d.is_zero()) return std::nullopt;
    return d;
  };
  SectionVerdict v;
  v.tuples_total = total;
  auto hit = first_violation<Section>(total, opts.workers, probe);
  if (!hit) {
    v.tuples_checked = total;
    return v;
  }
  const auto k = hit->first;
  v.passed = false;
  v.inputs = {secs[k / (b * b)], secs[(k / b) % b], secs[k % b]};
  v.defect = std::move(hit->second);
  v.tuples_checked = k + 1;
  return v;
}

SectionVerdict square_bracket_check(const AlgebroidSpec& a, const CheckOptions& opts) {
  const auto basis = monomial_sections(a, 1);
  std::vector<Section> xs;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    xs.push_back(basis[p]);
    for (std::size_t q = p + 1; q < basis.size(); ++q) xs.push_back(add(basis[p], basis[q]));
  }
  const std::uint64_t ny = basis.size();
  const std::uint64_t total = xs.size() * ny;
  auto probe = [&](std::uint64_t k) -> std::optional<Section> {
    const Section& x = xs[k / ny];
    Section d = bracket_sections(a, bracket_sections(a, x, x), basis[k % ny]);
    if (d.is_zero()) return std::nullopt;
    return d;
  };
  SectionVerdict v;
  v.tuples_total = total;
  auto hit = first_violation<Section>(total, opts.workers, probe);
  if (!hit) {
    v.tuples_checked = total;
    return v;
  }
  v.passed = false;
  v.inputs = {xs[hit->first / ny], basis[hit->first % ny]};
  v.defect = std::move(hit->second);
  v.tuples_checked = hit->first + 1;
  return v;
}

AnchorMatrix anchor_gap(const AlgebroidSpec& a) {
  AnchorMatrix gap = a.anchor(AnchorSide::left);
  const AnchorMatrix& right = a.anchor(AnchorSide::right);
  for (std::size_t u = 0; u < gap.size(); ++u)
    for (std::size_t i = 0; i < gap[u].size(); ++i) gap[u][i] -= right[u][i];
  return gap;
}

std::vector<Rational> eval_section(const AlgebroidSpec& a, const Section& s,
                                   std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(s.components.size());
  for (const auto& c : s.components) out.push_back(eval_point(c, point, a.base()));
  return out;
}

Theorem3Report theorem3_probe(const AlgebroidSpec& a,
                              std::span<const std::vector<Rational>> points,
                              std::span<const std::pair<Section, Section>> sections,
                              const CheckOptions& opts) {
  if (!a.base().is_free()) throw UnsupportedError("theorem3_probe: base ring must be free");
  const Ring& base = a.base();
  const std::size_t m = base.nvars();

  // Anchor images as vector fields: a(X)^u = sum_i anchor[u][i] X_i.
  auto field = [&](AnchorSide side, const Section& x) {
    std::vector<Polynomial> f(m, Polynomial(m));
    const AnchorMatrix& mat = a.anchor(side);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t i = 0; i < a.rank(); ++i)
        f[u] += multiply(mat[u][i], x.components[i], base);
    return f;
  };
  auto eval_all = [&](const std::vector<Polynomial>& ps, std::span<const Rational> p) {
    std::vector<Rational> out;
    for (const auto& q : ps) out.push_back(eval_point(q, p, base));
    return out;
  };

  std::vector<Section> sampled;
  for (const auto& [x, y] : sections) {
    sampled.push_back(x);
    sampled.push_back(y);
  }
  struct Symbolic {
    std::vector<Polynomial> left, right;
  };
  std::vector<Symbolic> anchors;
  for (const auto& s : sampled) anchors.push_back({field(AnchorSide::left, s), field(AnchorSide::right, s)});

  // Quantities that must vanish at nonvanishing points, computed once.
  struct Target {
    std::vector<Section> sections;
    Section value;
  };
  std::vector<Target> targets;
  for (const auto& [x, y] : sections) {
    targets.push_back({{x}, bracket_sections(a, x, x)});
    targets.push_back({{y}, bracket_sections(a, y, y)});
    targets.push_back({{x, y}, add(bracket_sections(a, x, y), bracket_sections(a, y, x))});
  }

  struct PointResult {
    ProbePoint probe;
    std::optional<SkewViolation> first;
  };
  auto run_point = [&](std::uint64_t pi) {
    const auto& p = points[pi];
    if (p.size() != m) throw StructuralError("theorem3_probe: point has wrong dimension");
    PointResult r;
    r.probe.point = p;
    for (const auto& an : anchors) {
      const auto l = eval_all(an.left, p);
      const auto rr = eval_all(an.right, p);
      if (!values_zero(l) || !values_zero(rr)) r.probe.anchor_vanishing = false;
      std::vector<Rational> diff;
      for (std::size_t u = 0; u < m; ++u) diff.push_back(l[u] - rr[u]);
      if (!values_zero(diff)) r.probe.gap_zero = false;
    }
    if (r.probe.anchor_vanishing) return r;
    for (const auto& t : targets) {
      auto v = eval_section(a, t.value, p);
      if (values_zero(v)) continue;
      ++r.probe.skew_violations;
      if (!r.first) r.first = SkewViolation{pi, t.sections, std::move(v)};
    }
    return r;
  };

  Theorem3Report report;
  report.jacobi = jacobi_check(a, opts);
  auto results = parallel_map<PointResult>(points.size(), opts.workers, run_point);
  for (auto& r : results) {
    const bool bad = !r.probe.anchor_vanishing && (!r.probe.gap_zero || r.probe.skew_violations > 0);
    if (bad) {
      ++report.violations;
      if (!report.first_violation) {
        if (r.first) {
          report.first_violation = std::move(r.first);
        } else {
          report.first_violation = SkewViolation{report.points.size(), {}, {}};
        }
      }
    }
    report.points.push_back(std::move(r.probe));
  }
  report.consistent = !report.jacobi.passed || report.violations == 0;
  return report;
}

Ring dual_ring(const Ring& base, std::size_t rank) {
  std::vector<std::string> names = base.variables();
  for (std::size_t i = 0; i < rank; ++i) {
    std::string name = "xi" + std::to_string(i + 1);
    while (base.index_of(name)) name += "_";
    names.push_back(std::move(name));
  }
  return Ring(std::move(names));
}

Polynomial lift_to_dual(const Polynomial& f, const Ring& dual) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(dual.nvars());
    for (std::size_t u = 0; u < t.monomial.size(); ++u) m[u] = t.monomial[u];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(dual.nvars(), std::move(terms));
}

Polynomial iota(const Section& x, const Ring& dual) {
  const std::size_t m = dual.nvars() - x.components.size();
  Polynomial out(dual.nvars());
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    if (x.components[i].is_zero()) continue;
    out += multiply(lift_to_dual(x.components[i], dual), Polynomial::variable(dual.nvars(), m + i),
                    dual);
  }
  return out;
}

DualTensor to_linear_tensor(const AlgebroidSpec& a) {
  const std::size_t m = a.base_dim();
  const std::size_t r = a.rank();
  const Ring dual = dual_ring(a.base(), r);
  BracketTensor t(dual, 2);
  for (const auto& [key, c] : a.structure_constants()) {
    const auto& [i, j, k] = key;
    t.add({m + i, m + j},
          multiply(lift_to_dual(c, dual), Polynomial::variable(dual.nvars(), m + k), dual));
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t i = 0; i < r; ++i) {
      t.add({m + i, u}, lift_to_dual(a.anchor(AnchorSide::left)[u][i], dual));
      t.add({u, m + i}, -lift_to_dual(a.anchor(AnchorSide::right)[u][i], dual));
    }
  }
  return DualTensor{std::move(t), m, r};
}

AlgebroidSpec from_linear_tensor(const BracketTensor& t, std::size_t base_dim, std::size_t rank) {
  const Ring& dual = t.ring();
  if (t.arity() != 2) throw StructuralError("from_linear_tensor: tensor must have arity 2");
  if (dual.nvars() != base_dim + rank)
    throw StructuralError("from_linear_tensor: ring has " + std::to_string(dual.nvars()) +
                          " variables, expected " + std::to_string(base_dim + rank));
  if (!dual.is_free()) throw UnsupportedError("from_linear_tensor: dual ring must be free");

  std::vector<std::string> base_names(dual.variables().begin(),
                                      dual.variables().begin() + static_cast<std::ptrdiff_t>(base_dim));
  AlgebroidSpec a(Ring(std::move(base_names)), rank);

  auto reject = [&](const IndexTuple& idx, const Polynomial& c, const std::string& why) {
    throw StructuralError("from_linear_tensor: coefficient at " + format_index(idx) + " = " +
                          c.str(dual) + " " + why);
  };
  auto fiber_degree = [&](const Monomial& mono) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < rank; ++i) d += mono[base_dim + i];
    return d;
  };
  auto project = [&](const Monomial& mono) {
    Monomial b(base_dim);
    for (std::size_t u = 0; u < base_dim; ++u) b[u] = mono[u];
    return b;
  };

  std::map<AlgebroidSpec::StructureKey, std::vector<Term>> structure;
  for (const auto& [idx, c] : t.coefficients()) {
    const bool fiber0 = idx[0] >= base_dim;
    const bool fiber1 = idx[1] >= base_dim;
    if (!fiber0 && !fiber1) reject(idx, c, "lies on a (base, base) pair");
    if (fiber0 && fiber1) {
      const std::size_t i = idx[0] - base_dim;
      const std::size_t j = idx[1] - base_dim;
      for (const auto& term : c.terms()) {
        if (fiber_degree(term.monomial) != 1) reject(idx, c, "is not linear in the fiber coordinates");
        std::size_t k = 0;
        while (term.monomial[base_dim + k] == 0) ++k;
        structure[{i, j, k}].push_back({project(term.monomial), term.coeff});
      }
      continue;
    }
    std::vector<Term> terms;
    for (const auto& term : c.terms()) {
      if (fiber_degree(term.monomial) != 0) reject(idx, c, "depends on the fiber coordinates");
      terms.push_back({project(term.monomial), term.coeff});
    }
    Polynomial value = Polynomial::from_terms(base_dim, std::move(terms));
    if (fiber0) {
      a.set_anchor(AnchorSide::left, idx[1], idx[0] - base_dim, value);
    } else {
      a.set_anchor(AnchorSide::right, idx[0], idx[1] - base_dim, -value);
    }
  }
  for (auto& [key, terms] : structure)
    a.set_structure(key[0], key[1], key[2], Polynomial::from_terms(base_dim, std::move(terms)));
  return a;
}

AlgebroidSpec from_linear_tensor(const DualTensor& t) {
  return from_linear_tensor(t.tensor, t.base_dim, t.rank);
}

AlgebroidSpec tangent_algebroid(const Ring& base) {
  AlgebroidSpec a(base, base.nvars());
  for (std::size_t u = 0; u < base.nvars(); ++u) {
    a.set_anchor(AnchorSide::left, u, u, Polynomial::constant(base.nvars(), 1));
    a.set_anchor(AnchorSide::right, u, u, Polynomial::constant(base.nvars(), 1));
  }
  return a;
}

AlgebroidSpec random_algebroid(const Ring& base, std::size_t rank, unsigned degree,
                               std::uint64_t seed) {
  AlgebroidSpec a(base, rank);
  std::uint64_t stream = seed;
  auto next = [&] {
    stream = mix_seed(stream, 1);
    return random_poly(base, degree, 2, stream);
  };
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) a.set_structure(i, j, k, next());
  for (std::size_t u = 0; u < base.nvars(); ++u) {
    for (std::size_t i = 0; i < rank; ++i) {
      a.set_anchor(AnchorSide::left, u, i, next());
      a.set_anchor(AnchorSide::right, u, i, next());
    }
  }
  return a;
}

Section random_section(const AlgebroidSpec& a, unsigned degree, std::uint64_t seed) {
  Section s = a.zero_section();
  std::uint64_t stream = seed;
  for (auto& c : s.components) {
    stream = mix_seed(stream, 2);
    c = random_poly(a.base(), degree, 3, stream);
  }
  return s;
}

}  // namespace nlb
