// SPDX-License-Identifier: Apache-2.0
#include "rigaqep/splines.hpp"

#include <algorithm>
#include <cmath>

namespace rq {

int KnotVector::find_span(double u) const {
  const int n = basis_count();
  const int p = degree;
  if (u >= knots[n]) return n - 1;  // closes the last span at u = 1
  if (u <= knots[p]) return p;
  int lo = p, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (u < knots[mid])
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

UnivariateSpace::UnivariateSpace(KnotVector kv) : kv_(std::move(kv)) {
  const int p = kv_.degree;
  const int nk = static_cast<int>(kv_.knots.size());
  const int n = kv_.basis_count();
  if (n < p + 1) fail(errc::domain, "knot vector has too few knots for its degree");

  // Interior breakpoints with multiplicities.
  int i = p + 1;
  while (i < nk - p - 1) {
    const double v = kv_.knots[i];
    int m = 0;
    while (i < nk - p - 1 && kv_.knots[i] == v) {
      ++m;
      ++i;
    }
    if (m > p) fail(errc::domain, "interior knot multiplicity exceeds degree");
    interior_.push_back({v, m});
  }

  // Element table: one element per nonempty knot span.
  for (int s = p; s < n; ++s) {
    if (kv_.knots[s + 1] > kv_.knots[s]) {
      elem_span_.push_back(s);
      elem_first_basis_.push_back(s - p);
      elem_x0_.push_back(kv_.knots[s]);
      elem_x1_.push_back(kv_.knots[s + 1]);
    }
  }

  support_first_.assign(n, -1);
  support_last_.assign(n, -1);
  for (int e = 0; e < static_cast<int>(elem_span_.size()); ++e) {
    for (int b = elem_first_basis_[e]; b <= elem_first_basis_[e] + p; ++b) {
      if (support_first_[b] < 0) support_first_[b] = e;
      support_last_[b] = e;
    }
  }
}

int UnivariateSpace::elem_of(double u) const {
  if (u < 0.0 || u > 1.0) fail(errc::domain, "parameter outside [0,1]");
  const int span = kv_.find_span(u);
  // Elements are the nonempty spans in ascending order.
  const auto it = std::lower_bound(elem_span_.begin(), elem_span_.end(), span);
  return static_cast<int>(it - elem_span_.begin());
}

KnotVector make_open_knots(int degree, int elem_count, const std::vector<int>& multiplicities) {
  if (degree < 1) fail(errc::domain, "degree must be at least 1");
  if (elem_count < 1) fail(errc::domain, "element count must be at least 1");
  if (static_cast<int>(multiplicities.size()) != elem_count - 1)
    fail(errc::domain, "need one multiplicity per interior breakpoint");
  KnotVector kv;
  kv.degree = degree;
  kv.knots.assign(degree + 1, 0.0);
  for (int b = 1; b < elem_count; ++b) {
    const int m = multiplicities[b - 1];
    if (m < 1 || m > degree)
      fail(errc::domain, "interior multiplicity outside [1, degree] breaks continuity bounds");
    kv.knots.insert(kv.knots.end(), m, static_cast<double>(b) / elem_count);
  }
  kv.knots.insert(kv.knots.end(), degree + 1, 1.0);
  return kv;
}

KnotVector make_open_knots(int degree, int elem_count) {
  return make_open_knots(degree, elem_count, std::vector<int>(elem_count - 1, 1));
}

UnivariateSpace raise_separator_multiplicity(const UnivariateSpace& space,
                                             const std::vector<int>& separator_breakpoints,
                                             int target_continuity, bool* lowered_nothing) {
  if (target_continuity != 0 && target_continuity != 1)
    fail(errc::domain, "separator continuity must be C0 or C1");
  const int p = space.degree();
  if (target_continuity >= p) fail(errc::domain, "target continuity must be below the degree");
  auto bps = space.interior_breakpoints();
  const int target_mult = p - target_continuity;
  bool changed = false;
  for (int b : separator_breakpoints) {
    if (b < 0 || b >= static_cast<int>(bps.size()))
      fail(errc::domain, "separator index is not an interior breakpoint");
    if (bps[b].multiplicity < target_mult) {
      bps[b].multiplicity = target_mult;
      changed = true;
    }
  }
  if (lowered_nothing) *lowered_nothing = !changed;
  std::vector<int> mults(bps.size());
  for (std::size_t k = 0; k < bps.size(); ++k) mults[k] = bps[k].multiplicity;
  return UnivariateSpace(make_open_knots(p, space.elem_count(), mults));
}

BasisEval eval_basis(const KnotVector& kv, double u) {
  if (u < 0.0 || u > 1.0) fail(errc::domain, "parameter outside [0,1]");
  const int p = kv.degree;
  const int span = kv.find_span(u);
  BasisEval out;
  out.span = span;
  out.values.assign(p + 1, 0.0);
  // Triangular recursion over the nonzero bases of the span; the left/right
  // differences keep every denominator strictly positive.
  std::vector<double> left(p + 1), right(p + 1);
  out.values[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - kv.knots[span + 1 - j];
    right[j] = kv.knots[span + j] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = out.values[r] / (right[r + 1] + left[j - r]);
      out.values[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    out.values[j] = saved;
  }
  return out;
}

BasisDerivEval eval_basis_derivatives(const KnotVector& kv, double u, int max_order) {
  if (u < 0.0 || u > 1.0) fail(errc::domain, "parameter outside [0,1]");
  const int p = kv.degree;
  if (max_order > p) fail(errc::domain, "derivative order exceeds degree");
  const int span = kv.find_span(u);

  // Basis values plus knot-difference table (NURBS-book A2.3 layout).
  std::vector<double> ndu((p + 1) * (p + 1));
  auto NDU = [&](int r, int c) -> double& { return ndu[r * (p + 1) + c]; };
  std::vector<double> left(p + 1), right(p + 1);
  NDU(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - kv.knots[span + 1 - j];
    right[j] = kv.knots[span + j] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      NDU(j, r) = right[r + 1] + left[j - r];
      const double tmp = NDU(r, j - 1) / NDU(j, r);
      NDU(r, j) = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    NDU(j, j) = saved;
  }

  BasisDerivEval out;
  out.span = span;
  out.order = max_order;
  out.cols = p + 1;
  out.table.assign((max_order + 1) * (p + 1), 0.0);
  for (int j = 0; j <= p; ++j) out.table[j] = NDU(j, p);

  std::vector<double> a(2 * (p + 1));
  auto A = [&](int r, int c) -> double& { return a[r * (p + 1) + c]; };
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    A(0, 0) = 1.0;
    for (int k = 1; k <= max_order; ++k) {
      double d = 0.0;
      const int rk = r - k, pk = p - k;
      if (r >= k) {
        A(s2, 0) = A(s1, 0) / NDU(pk + 1, rk);
        d = A(s2, 0) * NDU(rk, pk);
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        A(s2, j) = (A(s1, j) - A(s1, j - 1)) / NDU(pk + 1, rk + j);
        d += A(s2, j) * NDU(rk + j, pk);
      }
      if (r <= pk) {
        A(s2, k) = -A(s1, k - 1) / NDU(pk + 1, r);
        d += A(s2, k) * NDU(r, pk);
      }
      out.table[k * (p + 1) + r] = d;
      std::swap(s1, s2);
    }
  }
  // Multiply rows by p!/(p-k)!.
  double f = p;
  for (int k = 1; k <= max_order; ++k) {
    for (int j = 0; j <= p; ++j) out.table[k * (p + 1) + j] *= f;
    f *= (p - k);
  }
  return out;
}

}  // namespace rq
