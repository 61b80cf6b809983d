// SPDX-License-Identifier: Apache-2.0
// AVX2+FMA variants of the vector kernels. Compiled as a separate
// translation unit with -mavx2 -mfma; only reached through the runtime
// dispatch table, so the rest of the build stays baseline.
#include "rigaqep/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace rq::kern {

namespace {

// [re0, im0, re1, im1] lane layout throughout; two complex doubles per register.

inline __m256d cmul(__m256d a, __m256d ar_dup, __m256d ai_dup) {
  // a holds [xr0, xi0, xr1, xi1]; computes x * (ar + i*ai) for scalar (ar, ai).
  const __m256d xsw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, ar_dup, _mm256_mul_pd(xsw, ai_dup));
}

inline cdouble reduce_pair(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

inline double reduce_scalar(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  const __m128d sh = _mm_unpackhi_pd(s, s);
  return _mm_cvtsd_f64(_mm_add_sd(s, sh));
}

void axpy_avx2(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cdouble dotc_avx2(const cdouble* x, const cdouble* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d signs = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d xsw = _mm256_xor_pd(_mm256_permute_pd(xv, 0x5), signs);
    acc_im = _mm256_fmadd_pd(xsw, yv, acc_im);
  }
  double rr = reduce_scalar(acc_re);
  double ri = reduce_scalar(acc_im);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    rr += xr * yr + xi * yi;
    ri += xr * yi - xi * yr;
  }
  return {rr, ri};
}

void scal_avx2(cdouble a, cdouble* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* xp = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, cmul(xv, ar, ai));
  }
  for (; i < n; ++i) x[i] *= a;
}

double nrm2sq_avx2(const cdouble* x, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = reduce_scalar(acc);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void spmv_csr_avx2(std::size_t nrows, const std::int64_t* rowptr, const std::int32_t* col,
                   const cdouble* val, const cdouble* x, cdouble* y) {
  const double* vp = reinterpret_cast<const double*>(val);
  for (std::size_t r = 0; r < nrows; ++r) {
    const std::int64_t lo = rowptr[r], hi = rowptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    std::int64_t k = lo;
    for (; k + 2 <= hi; k += 2) {
      const __m256d vv = _mm256_loadu_pd(vp + 2 * k);
      const __m128d x0 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[k]));
      const __m128d x1 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[k + 1]));
      const __m256d xv = _mm256_set_m128d(x1, x0);
      const __m256d vsw = _mm256_permute_pd(vv, 0x5);
      const __m256d xim = _mm256_permute_pd(xv, 0xF);
      const __m256d xre = _mm256_movedup_pd(xv);
      acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(vv, xre, _mm256_mul_pd(vsw, xim)));
    }
    cdouble s = reduce_pair(acc);
    for (; k < hi; ++k) s += val[k] * x[col[k]];
    y[r] = s;
  }
}

std::uint64_t rank1_update_avx2(cdouble* tile, std::size_t ld, const cdouble* lcol,
                                const cdouble* urow, std::size_t rows, std::size_t cols) {
  std::uint64_t macs = 0;
  const double* up = reinterpret_cast<const double*>(urow);
  for (std::size_t i = 0; i < rows; ++i) {
    const cdouble l = lcol[i];
    if (l == cdouble{}) continue;
    const __m256d lr = _mm256_set1_pd(l.real());
    const __m256d li = _mm256_set1_pd(l.imag());
    double* row = reinterpret_cast<double*>(tile + i * ld);
    std::size_t k = 0;
    for (; k + 2 <= cols; k += 2) {
      const __m256d uv = _mm256_loadu_pd(up + 2 * k);
      const __m256d rv = _mm256_loadu_pd(row + 2 * k);
      _mm256_storeu_pd(row + 2 * k, _mm256_sub_pd(rv, cmul(uv, lr, li)));
    }
    cdouble* rowc = tile + i * ld;
    for (; k < cols; ++k) rowc[k] -= l * urow[k];
    macs += cols;
  }
  return macs;
}

constexpr Backend kAvx2 = {
    "avx2",        axpy_avx2, dotc_avx2,        scal_avx2,
    nrm2sq_avx2,   spmv_csr_avx2,
    rank1_update_avx2,
};

}  // namespace

const Backend* avx2_backend() { return avx2_supported() ? &kAvx2 : nullptr; }

}  // namespace rq::kern

#endif  // x86-64
