#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlb/polynomial.hpp"
#include "nlb/tensor.hpp"
#include "nlb/verdict.hpp"

namespace nlb {

/// Section of the trivial rank-r bundle over the base: r polynomials.
struct Section {
  std::vector<Polynomial> components;

  bool is_zero() const noexcept;
  std::string str(const Ring& base) const;
  friend bool operator==(const Section&, const Section&) = default;
};

/// anchor[u][i]: coefficient of d/dx_u in the image of e_i (m rows, r columns).
using AnchorMatrix = std::vector<std::vector<Polynomial>>;

enum class AnchorSide { left, right };

/// Binary algebroid on a trivial bundle over a free polynomial base:
/// [e_i, e_j] = sum_k c_ij^k e_k together with left and right anchors.
/// All indices are 0-based.
class AlgebroidSpec {
 public:
  using StructureKey = std::array<std::size_t, 3>;

  AlgebroidSpec() = default;
  AlgebroidSpec(Ring base, std::size_t rank);

  const Ring& base() const noexcept { return base_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t base_dim() const noexcept { return base_.nvars(); }

  void set_structure(std::size_t i, std::size_t j, std::size_t k, const Polynomial& value);
  Polynomial structure(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<StructureKey, Polynomial>& structure_constants() const noexcept { return structure_; }

  void set_anchor(AnchorSide side, std::size_t u, std::size_t i, const Polynomial& value);
  const AnchorMatrix& anchor(AnchorSide side) const noexcept {
    return side == AnchorSide::left ? left_ : right_;
  }

  Section zero_section() const;
  /// f * e_i
  Section basis(std::size_t i, const Polynomial& f) const;
  Section basis(std::size_t i) const;

  /// a_side(X)(f) = sum_{u,i} anchor[u][i] X_i d_u f
  Polynomial anchor_apply(AnchorSide side, const Section& x, const Polynomial& f) const;

  friend bool operator==(const AlgebroidSpec&, const AlgebroidSpec&) = default;

 private:
  void check_section(const Section& s, const char* what) const;

  Ring base_;
  std::size_t rank_ = 0;
  std::map<StructureKey, Polynomial> structure_;
  AnchorMatrix left_;
  AnchorMatrix right_;
};

/// [X,Y]_k = sum_ij X_i Y_j c_ij^k + a_l(X)(Y_k) - a_r(Y)(X_k)
Section bracket_sections(const AlgebroidSpec& a, const Section& x, const Section& y);

/// [X,[Y,Z]] - [[X,Y],Z] - [Y,[X,Z]]
Section jacobi_defect(const AlgebroidSpec& a, const Section& x, const Section& y, const Section& z);

/// Outcome of a check over sections.
struct SectionVerdict {
  bool passed = true;
  std::vector<Section> inputs;  // witness inputs, empty on pass
  std::optional<Section> defect;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_total = 0;
};

/// Monomial sections x^a e_i with deg a <= max_degree, ordered by i then by
/// standard_monomials() order.
std::vector<Section> monomial_sections(const AlgebroidSpec& a, unsigned max_degree = 1);

/// jacobi_defect on all triples of degree <= 1 monomial sections (complete for
/// their span since the defect is trilinear over scalars).
SectionVerdict jacobi_check(const AlgebroidSpec& a, const CheckOptions& opts = {});

/// [[X,X],Y] = 0 with Y over degree <= 1 monomial sections and X over those
/// sections and their pairwise sums, which determines the quadratic map on the
/// whole span.
SectionVerdict square_bracket_check(const AlgebroidSpec& a, const CheckOptions& opts = {});

/// anchor_left - anchor_right, entrywise.
AnchorMatrix anchor_gap(const AlgebroidSpec& a);

struct ProbePoint {
  std::vector<Rational> point;
  bool anchor_vanishing = true;
  bool gap_zero = true;
  std::size_t skew_violations = 0;
};

struct SkewViolation {
  std::size_t point_index;
  std::vector<Section> sections;     // X, or (X, Y) for [X,Y] + [Y,X]
  std::vector<Rational> value;       // nonzero section value at the point
};

struct Theorem3Report {
  SectionVerdict jacobi;
  std::vector<ProbePoint> points;
  std::size_t violations = 0;
  std::optional<SkewViolation> first_violation;
  /// False only when Jacobi holds and some anchor-nonvanishing point shows an
  /// anchor gap or a non-skew bracket value.
  bool consistent = true;
};

/// Classifies each point as anchor-vanishing or not (both anchors applied to
/// every sampled section, evaluated at the point) and, at non-vanishing
/// points, evaluates the anchor gap and [X,X], [Y,Y], [X,Y]+[Y,X] there.
Theorem3Report theorem3_probe(const AlgebroidSpec& a, std::span<const std::vector<Rational>> points,
                              std::span<const std::pair<Section, Section>> sections,
                              const CheckOptions& opts = {});

/// Values of a section at a point of a free base.
std::vector<Rational> eval_section(const AlgebroidSpec& a, const Section& s,
                                   std::span<const Rational> point);

/// Arity-2 tensor on the dual bundle, variables (x_1..x_m, xi_1..xi_r).
struct DualTensor {
  BracketTensor tensor;
  std::size_t base_dim = 0;
  std::size_t rank = 0;
};

/// Dual ring: base variables followed by fiber coordinates xi1..xir (renamed
/// with trailing underscores if they clash with base names).
Ring dual_ring(const Ring& base, std::size_t rank);

DualTensor to_linear_tensor(const AlgebroidSpec& a);

/// Inverse of to_linear_tensor. Rejects (x,x) coefficients, mixed
/// coefficients that depend on xi, and (xi,xi) coefficients with a term that is
/// not of degree exactly 1 in xi; the error names the offending coefficient.
AlgebroidSpec from_linear_tensor(const BracketTensor& t, std::size_t base_dim, std::size_t rank);
AlgebroidSpec from_linear_tensor(const DualTensor& t);

/// Base polynomial embedded in the dual ring.
Polynomial lift_to_dual(const Polynomial& f, const Ring& dual);
/// iota_X = sum_i X_i xi_i in the dual ring.
Polynomial iota(const Section& x, const Ring& dual);

/// Tangent algebroid of Q^m: rank m, zero structure, identity anchors.
AlgebroidSpec tangent_algebroid(const Ring& base);

/// Seeded random algebroid with structure data and anchors of degree <= degree.
AlgebroidSpec random_algebroid(const Ring& base, std::size_t rank, unsigned degree,
                               std::uint64_t seed);

/// Seeded random section with components of degree <= degree.
Section random_section(const AlgebroidSpec& a, unsigned degree, std::uint64_t seed);

}  // namespace nlb
