// SPDX-License-Identifier: Apache-2.0
#include "rigaqep/spaces.hpp"

#include <algorithm>

namespace rq {

namespace {

// Interior breakpoints of the recursive symmetric bisection, as 0-based
// interior indices (breakpoint k sits at parameter k+1 over ne).
std::vector<int> bisection_separators(int elems, int levels) {
  std::vector<int> cuts;
  for (int l = 1; l <= levels; ++l) {
    const int blocks = 1 << l;
    const int step = elems / blocks;
    for (int b = 1; b < blocks; b += 2) cuts.push_back(b * step);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> idx;
  idx.reserve(cuts.size());
  for (int c : cuts) idx.push_back(c - 1);
  return idx;
}

UnivariateSpace direction_space(int degree, int elems, const std::vector<int>& separators,
                                int separator_continuity) {
  UnivariateSpace base{make_open_knots(degree, elems)};
  if (separators.empty()) return base;
  return raise_separator_multiplicity(base, separators, separator_continuity);
}

VectorSpace build_space(SpaceKind kind, int degree, int elems, int levels,
                        const BoxGeometry& geom) {
  if (degree < 2) fail(errc::domain, "vector-valued spaces need degree >= 2");
  if (elems < 2) fail(errc::domain, "need at least 2 elements per direction");
  geom.validate();
  if (levels < 0) fail(errc::domain, "negative partition level");
  if (levels > 0) {
    if (elems % (1 << levels) != 0)
      fail(errc::domain, "element count not divisible by 2^levels");
    if (elems / (1 << levels) < 2) fail(errc::domain, "macroelements must span >= 2 elements");
  }

  VectorSpace vs;
  vs.kind = kind;
  vs.degree = degree;
  vs.elems = elems;
  vs.geom = geom;
  vs.partition.levels = levels;
  vs.partition.separator_breakpoints = bisection_separators(elems, levels);

  const auto& seps = vs.partition.separator_breakpoints;
  // Degree-p directions get C1 separators, degree-(p-1) directions C0.
  const UnivariateSpace hi = direction_space(degree, elems, seps, 1);
  const UnivariateSpace lo = direction_space(degree - 1, elems, seps, 0);

  if (kind == SpaceKind::curl) {
    vs.comp_x = TensorSpace2D{lo, hi};
    vs.comp_y = TensorSpace2D{hi, lo};
  } else {
    vs.comp_x = TensorSpace2D{hi, lo};
    vs.comp_y = TensorSpace2D{lo, hi};
  }
  return vs;
}

}  // namespace

VectorSpace build_iga_space(SpaceKind kind, int degree, int elems, const BoxGeometry& geom) {
  return build_space(kind, degree, elems, 0, geom);
}

VectorSpace build_riga_space(SpaceKind kind, int degree, int elems, int levels,
                             const BoxGeometry& geom) {
  return build_space(kind, degree, elems, levels, geom);
}

std::vector<long> boundary_mask(const VectorSpace& space, ModelProblem problem,
                                EdgeSet rigid_edges) {
  std::vector<long> mask;
  const int nx1 = space.comp_x.nx(), ny1 = space.comp_x.ny();
  const int nx2 = space.comp_y.nx(), ny2 = space.comp_y.ny();

  if (problem == ModelProblem::em) {
    if (space.kind != SpaceKind::curl) fail(errc::domain, "em boundary mask needs a curl space");
    // E x n = 0 on the whole boundary: x-component vanishes on the horizontal
    // edges, y-component on the vertical ones.
    for (int i = 0; i < nx1; ++i) {
      mask.push_back(space.dof_x(i, 0));
      mask.push_back(space.dof_x(i, ny1 - 1));
    }
    for (int j = 0; j < ny2; ++j) {
      mask.push_back(space.dof_y(0, j));
      mask.push_back(space.dof_y(nx2 - 1, j));
    }
  } else {
    if (space.kind != SpaceKind::divergence)
      fail(errc::domain, "acoustic boundary mask needs a divergence space");
    // u . n = 0 on rigid edges only.
    if (rigid_edges.contains(Edge::left))
      for (int j = 0; j < ny1; ++j) mask.push_back(space.dof_x(0, j));
    if (rigid_edges.contains(Edge::right))
      for (int j = 0; j < ny1; ++j) mask.push_back(space.dof_x(nx1 - 1, j));
    if (rigid_edges.contains(Edge::bottom))
      for (int i = 0; i < nx2; ++i) mask.push_back(space.dof_y(i, 0));
    if (rigid_edges.contains(Edge::top))
      for (int i = 0; i < nx2; ++i) mask.push_back(space.dof_y(i, ny2 - 1));
  }
  std::sort(mask.begin(), mask.end());
  mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
  return mask;
}

PiolaFactors piola_factors(SpaceKind kind, const BoxGeometry& geom) {
  geom.validate();
  const double lx = geom.lx(), ly = geom.ly();
  const double det = lx * ly;
  PiolaFactors f;
  f.detj = det;
  if (kind == SpaceKind::curl) {
    // value = DF^{-T} * parametric value; curl scales with 1/det.
    f.vx = 1.0 / lx;
    f.vy = 1.0 / ly;
  } else {
    // value = DF/det * parametric value; divergence scales with 1/det.
    f.vx = 1.0 / ly;
    f.vy = 1.0 / lx;
  }
  f.dscale = 1.0 / det;
  return f;
}

PiolaApplied piola_map(SpaceKind kind, const BoxGeometry& geom, const std::array<double, 2>& value,
                       const std::array<double, 4>& grads) {
  const PiolaFactors f = piola_factors(kind, geom);
  PiolaApplied out;
  out.value = {f.vx * value[0], f.vy * value[1]};
  if (kind == SpaceKind::curl) {
    // parametric curl = d(vy)/dxi - d(vx)/deta
    out.curl_or_div = f.dscale * (grads[2] - grads[1]);
  } else {
    // parametric div = d(vx)/dxi + d(vy)/deta
    out.curl_or_div = f.dscale * (grads[0] + grads[3]);
  }
  return out;
}

}  // namespace rq
