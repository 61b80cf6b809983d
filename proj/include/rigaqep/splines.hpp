// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rigaqep/types.hpp"

namespace rq {

/// Open (clamped) knot sequence on [0,1] with uniform breakpoints.
struct KnotVector {
  int degree = 1;
  std::vector<double> knots;  // nondecreasing, first/last degree+1 entries pinned to 0/1

  int basis_count() const { return static_cast<int>(knots.size()) - degree - 1; }

  /// Knot span index containing u, half-open [knot_i, knot_{i+1}), closing at u = 1.
  int find_span(double u) const;
};

struct Breakpoint {
  double value = 0.0;
  int multiplicity = 1;
};

/// Univariate spline space: knot vector plus breakpoint/continuity bookkeeping
/// and basis-support maps. Immutable after construction.
class UnivariateSpace {
public:
  UnivariateSpace() = default;
  explicit UnivariateSpace(KnotVector kv);

  const KnotVector& kv() const { return kv_; }
  int degree() const { return kv_.degree; }
  int basis_count() const { return kv_.basis_count(); }
  int elem_count() const { return static_cast<int>(interior_.size()) + 1; }
  const std::vector<Breakpoint>& interior_breakpoints() const { return interior_; }

  /// Continuity p - multiplicity at interior breakpoint index b (0-based).
  int continuity_at(int b) const { return kv_.degree - interior_[b].multiplicity; }

  /// Inclusive element range [first, last] covered by the support of basis i.
  int support_first_elem(int i) const { return support_first_[i]; }
  int support_last_elem(int i) const { return support_last_[i]; }

  /// Bases with nonzero value on element e are span_base(e) .. span_base(e)+degree.
  int span_base(int e) const { return elem_first_basis_[e]; }
  /// Knot-span index of element e (for evaluation at points inside e).
  int elem_span(int e) const { return elem_span_[e]; }
  double elem_x0(int e) const { return elem_x0_[e]; }
  double elem_x1(int e) const { return elem_x1_[e]; }

  /// Element containing u (half-open convention, closed at u = 1).
  int elem_of(double u) const;

private:
  KnotVector kv_;
  std::vector<Breakpoint> interior_;
  std::vector<int> support_first_, support_last_;
  std::vector<int> elem_first_basis_, elem_span_;
  std::vector<double> elem_x0_, elem_x1_;
};

/// Open knot vector over [0,1] with `elem_count` uniform elements and the given
/// interior-breakpoint multiplicities (size elem_count-1; all 1 = maximum
/// continuity). Throws on multiplicities outside [1, degree].
KnotVector make_open_knots(int degree, int elem_count, const std::vector<int>& multiplicities);

/// Convenience: uniform knots with all interior multiplicities equal to 1.
KnotVector make_open_knots(int degree, int elem_count);

/// rIGA separator insertion: raises the multiplicity at the listed interior
/// breakpoints (0-based indices) so their continuity becomes target_continuity
/// (0 or 1). Breakpoints already at or below the target continuity are left
/// unchanged; `lowered_nothing` (optional) reports that no-op case.
UnivariateSpace raise_separator_multiplicity(const UnivariateSpace& space,
                                             const std::vector<int>& separator_breakpoints,
                                             int target_continuity,
                                             bool* lowered_nothing = nullptr);

/// Values of the degree+1 bases that are nonzero on the span containing u.
/// Basis indices are span-degree .. span.
struct BasisEval {
  int span = 0;
  std::vector<double> values;  // size degree+1
};

BasisEval eval_basis(const KnotVector& kv, double u);

/// Derivative table, rows 0..max_order, each row the (p+1) nonzero bases on
/// the span of u; row 0 equals eval_basis values. Row-major layout
/// (max_order+1) x (degree+1).
struct BasisDerivEval {
  int span = 0;
  int order = 0;
  std::vector<double> table;
  double value(int r, int j) const { return table[r * cols + j]; }
  int cols = 0;
};

BasisDerivEval eval_basis_derivatives(const KnotVector& kv, double u, int max_order);

}  // namespace rq
