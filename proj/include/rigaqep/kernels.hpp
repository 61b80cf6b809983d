// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rigaqep/types.hpp"

// Data-parallel inner loops of the factorization and Krylov paths.
// Every operation has a scalar reference implementation and, on x86-64
// hardware with AVX2+FMA, a vectorized variant. The active variant is
// chosen once at startup from CPUID and can be overridden with the
// RIGA_QEP_SIMD environment variable ("scalar", "avx2", "auto") or
// programmatically via select_backend().

namespace rq::kern {

struct Backend {
  const char* name;

  // y += a * x
  void (*axpy)(cdouble a, const cdouble* x, cdouble* y, std::size_t n);
  // sum conj(x[i]) * y[i]
  cdouble (*dotc)(const cdouble* x, const cdouble* y, std::size_t n);
  // x *= a
  void (*scal)(cdouble a, cdouble* x, std::size_t n);
  // sum |x[i]|^2
  double (*nrm2sq)(const cdouble* x, std::size_t n);
  // y[r] = sum_j val[j] * x[col[j]] over row ranges of a CSR matrix
  void (*spmv_csr)(std::size_t nrows, const std::int64_t* rowptr, const std::int32_t* col,
                   const cdouble* val, const cdouble* x, cdouble* y);
  // In-place elimination step on a row-major tile: row i starts at
  // base + i*ld; its leading entry is the multiplier l_i and the following
  // ncols entries receive row[1..ncols] -= l_i * urow[0..ncols-1]. Rows with
  // l_i == 0 are skipped. Returns the number of multiply-adds performed.
  std::uint64_t (*elim_step)(cdouble* base, std::size_t ld, const cdouble* urow,
                             std::size_t nrows, std::size_t ncols);
};

const Backend& scalar_backend();
bool avx2_supported();
/// nullptr when this build/CPU has no AVX2 path.
const Backend* avx2_backend();

/// Currently active backend (set on first use from CPUID + RIGA_QEP_SIMD).
const Backend& active();

/// Force a backend by name ("scalar", "avx2", "auto"); throws rq::Error on
/// unknown names or unsupported hardware.
void select_backend(const std::string& name);

// Convenience forwarders through the active backend.
inline void axpy(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  active().axpy(a, x, y, n);
}
inline cdouble dotc(const cdouble* x, const cdouble* y, std::size_t n) {
  return active().dotc(x, y, n);
}
inline void scal(cdouble a, cdouble* x, std::size_t n) { active().scal(a, x, n); }
inline double nrm2sq(const cdouble* x, std::size_t n) { return active().nrm2sq(x, n); }
inline void spmv_csr(std::size_t nrows, const std::int64_t* rowptr, const std::int32_t* col,
                     const cdouble* val, const cdouble* x, cdouble* y) {
  active().spmv_csr(nrows, rowptr, col, val, x, y);
}
inline std::uint64_t elim_step(cdouble* base, std::size_t ld, const cdouble* urow,
                               std::size_t nrows, std::size_t ncols) {
  return active().elim_step(base, ld, urow, nrows, ncols);
}

}  // namespace rq::kern
