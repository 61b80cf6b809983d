// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "rigaqep/splines.hpp"
#include "rigaqep/types.hpp"

namespace rq {

/// Axis-aligned physical box; the geometric map is affine with a constant
/// diagonal Jacobian diag(lx, ly).
struct BoxGeometry {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;

  double lx() const { return x1 - x0; }
  double ly() const { return y1 - y0; }
  void validate() const {
    if (!(x1 > x0) || !(y1 > y0)) fail(errc::domain, "degenerate box geometry");
  }
};

/// Scalar tensor-product space: product bases B_i(xi) * B_j(eta).
struct TensorSpace2D {
  UnivariateSpace sx, sy;

  int nx() const { return sx.basis_count(); }
  int ny() const { return sy.basis_count(); }
  long dofs() const { return static_cast<long>(nx()) * ny(); }
  /// Scalar DOF id, x index fastest.
  long index(int i, int j) const { return static_cast<long>(j) * nx() + i; }
};

enum class SpaceKind { curl, divergence };

/// Recursive-bisection macroelement partition; levels = 0 reproduces IGA.
struct Partition {
  int levels = 0;
  /// 0-based interior-breakpoint indices of the separators (same in both
  /// directions; meshes are square). Sorted ascending.
  std::vector<int> separator_breakpoints;
};

enum class ModelProblem { em, acoustic };

/// 2D curl- or divergence-conforming vector-valued B-spline space with DOF
/// numbering (all x-component DOFs first), boundary masks and partition data.
struct VectorSpace {
  SpaceKind kind = SpaceKind::curl;
  int degree = 2;    // p
  int elems = 2;     // ne per direction
  BoxGeometry geom;
  Partition partition;
  TensorSpace2D comp_x, comp_y;

  long Nx() const { return comp_x.dofs(); }
  long Ny() const { return comp_y.dofs(); }
  long N() const { return Nx() + Ny(); }

  long dof_x(int i, int j) const { return comp_x.index(i, j); }
  long dof_y(int i, int j) const { return Nx() + comp_y.index(i, j); }
};

/// Maximum-continuity IGA space (single interior multiplicities). Requires
/// p >= 2 and ne >= 2.
VectorSpace build_iga_space(SpaceKind kind, int degree, int elems, const BoxGeometry& geom);

/// rIGA space: `levels` rounds of symmetric bisection insert separators at
/// breakpoints ne/2, ne/4 & 3ne/4, ... Degree-p directions receive C1
/// separators and degree-(p-1) directions C0 separators. levels = 0 equals
/// build_iga_space bit for bit.
VectorSpace build_riga_space(SpaceKind kind, int degree, int elems, int levels,
                             const BoxGeometry& geom);

/// Constrained (Dirichlet-type) DOF indices, sorted ascending.
/// em: tangential trace fixed on all four edges. acoustic: normal trace fixed
/// on the listed rigid edges only.
std::vector<long> boundary_mask(const VectorSpace& space, ModelProblem problem,
                                EdgeSet rigid_edges = EdgeSet::all());

/// Constant Piola transformation factors for a box geometry:
/// physical component value = (vx|vy factor) * parametric component;
/// physical curl or divergence = dscale * parametric curl/divergence.
struct PiolaFactors {
  double vx = 1.0, vy = 1.0, dscale = 1.0, detj = 1.0;
};

PiolaFactors piola_factors(SpaceKind kind, const BoxGeometry& geom);

/// Transform a parametric vector value and its first derivatives to physical
/// space. grads is {d(vx)/dxi, d(vx)/deta, d(vy)/dxi, d(vy)/deta}; the result
/// holds the physical value and the physical curl (curl kind) or divergence
/// (divergence kind).
struct PiolaApplied {
  std::array<double, 2> value{};
  double curl_or_div = 0.0;
};

PiolaApplied piola_map(SpaceKind kind, const BoxGeometry& geom, const std::array<double, 2>& value,
                       const std::array<double, 4>& grads);

}  // namespace rq
