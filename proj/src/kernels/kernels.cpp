// SPDX-License-Identifier: Apache-2.0
#include "rigaqep/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#define RQ_X86 1
#else
#define RQ_X86 0
#endif

namespace rq::kern {

namespace {

void axpy_scalar(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cdouble dotc_scalar(const cdouble* x, const cdouble* y, std::size_t n) {
  double rr = 0.0, ri = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    rr += xr * yr + xi * yi;
    ri += xr * yi - xi * yr;
  }
  return {rr, ri};
}

void scal_scalar(cdouble a, cdouble* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double nrm2sq_scalar(const cdouble* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void spmv_csr_scalar(std::size_t nrows, const std::int64_t* rowptr, const std::int32_t* col,
                     const cdouble* val, const cdouble* x, cdouble* y) {
  for (std::size_t r = 0; r < nrows; ++r) {
    double ar = 0.0, ai = 0.0;
    for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k) {
      const cdouble v = val[k];
      const cdouble xc = x[col[k]];
      ar += v.real() * xc.real() - v.imag() * xc.imag();
      ai += v.real() * xc.imag() + v.imag() * xc.real();
    }
    y[r] = {ar, ai};
  }
}

std::uint64_t rank1_update_scalar(cdouble* tile, std::size_t ld, const cdouble* lcol,
                                  const cdouble* urow, std::size_t rows, std::size_t cols) {
  std::uint64_t macs = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const cdouble l = lcol[i];
    if (l == cdouble{}) continue;
    cdouble* row = tile + i * ld;
    for (std::size_t k = 0; k < cols; ++k) row[k] -= l * urow[k];
    macs += cols;
  }
  return macs;
}

constexpr Backend kScalar = {
    "scalar",         axpy_scalar, dotc_scalar,        scal_scalar,
    nrm2sq_scalar,    spmv_csr_scalar,
    rank1_update_scalar,
};

bool cpu_has_avx2_fma() {
#if RQ_X86
  unsigned a, b, c, d;
  if (!__get_cpuid_count(7, 0, &a, &b, &c, &d)) return false;
  const bool avx2 = b & (1u << 5);
  if (!__get_cpuid(1, &a, &b, &c, &d)) return false;
  const bool fma = c & (1u << 12);
  return avx2 && fma;
#else
  return false;
#endif
}

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
  const char* env = std::getenv("RIGA_QEP_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
  if (env && std::strcmp(env, "avx2") == 0) {
    const Backend* v = avx2_backend();
    if (!v) fail(errc::config, "RIGA_QEP_SIMD=avx2 requested but AVX2 is unavailable");
    return v;
  }
  if (const Backend* v = avx2_backend()) return v;
  return &kScalar;
}

}  // namespace

const Backend& scalar_backend() { return kScalar; }

bool avx2_supported() {
  static const bool ok = cpu_has_avx2_fma();
  return ok;
}

#if !RQ_X86
const Backend* avx2_backend() { return nullptr; }
#endif

const Backend& active() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    b = pick_default();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void select_backend(const std::string& name) {
  if (name == "scalar") {
    g_active.store(&kScalar, std::memory_order_release);
  } else if (name == "avx2") {
    const Backend* v = avx2_backend();
    if (!v) fail(errc::config, "AVX2 backend unavailable on this CPU/build");
    g_active.store(v, std::memory_order_release);
  } else if (name == "auto") {
    g_active.store(pick_default(), std::memory_order_release);
  } else {
    fail(errc::config, "unknown SIMD backend '" + name + "'");
  }
}

}  // namespace rq::kern
