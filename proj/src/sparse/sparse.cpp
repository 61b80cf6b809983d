// SPDX-License-Identifier: Apache-2.0
#include "rigaqep/sparse.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rigaqep/kernels.hpp"

namespace rq {

SparseMatrix SparseMatrix::identity(long n) {
  SparseMatrix a;
  a.n = n;
  a.rowptr.resize(n + 1);
  a.col.resize(n);
  a.val.assign(n, cdouble{1.0, 0.0});
  for (long i = 0; i <= n; ++i) a.rowptr[i] = i;
  for (long i = 0; i < n; ++i) a.col[i] = static_cast<std::int32_t>(i);
  return a;
}

cdouble SparseMatrix::at(long r, long c) const {
  const auto b = col.begin() + rowptr[r], e = col.begin() + rowptr[r + 1];
  const auto it = std::lower_bound(b, e, static_cast<std::int32_t>(c));
  if (it == e || *it != c) return {};
  return val[it - col.begin()];
}

std::int64_t SparseMatrix::nnz_numeric() const {
  std::int64_t k = 0;
  for (const cdouble& v : val)
    if (v != cdouble{}) ++k;
  return k;
}

double SparseMatrix::norm1() const {
  std::vector<double> colsum(n, 0.0);
  for (long r = 0; r < n; ++r)
    for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k) colsum[col[k]] += std::abs(val[k]);
  double m = 0.0;
  for (double s : colsum) m = std::max(m, s);
  return m;
}

double SparseMatrix::norm_max() const {
  double m = 0.0;
  for (const cdouble& v : val) m = std::max(m, std::abs(v));
  return m;
}

bool SparseMatrix::is_real() const {
  for (const cdouble& v : val)
    if (v.imag() != 0.0) return false;
  return true;
}

void spmv(const CsrView& a, const cdouble* x, cdouble* y, CostLedger* ledger) {
  kern::spmv_csr(static_cast<std::size_t>(a.n), a.rowptr, a.col, a.val, x, y);
  if (ledger) ledger->add_mv(static_cast<std::uint64_t>(a.nnz));
}

cdouble dot(const cdouble* x, const cdouble* y, std::size_t n, CostLedger* ledger) {
  if (ledger) ledger->add_vv(n);
  return kern::dotc(x, y, n);
}

void axpy(cdouble a, const cdouble* x, cdouble* y, std::size_t n, CostLedger* ledger) {
  if (ledger) ledger->add_vv(n);
  kern::axpy(a, x, y, n);
}

void CostLedger::reset() {
  for (auto* p : {&fa_ops_, &fb_ops_, &mv_ops_, &vv_ops_, &chk_ops_, &rst_ops_, &fa_macs_,
                  &fb_macs_, &mv_macs_, &vv_macs_, &chk_macs_, &rst_macs_})
    p->store(0, std::memory_order_relaxed);
}

std::string CostLedger::to_json() const {
  std::ostringstream os;
  os.precision(17);
  auto cat = [&](const char* name, std::uint64_t ops, std::uint64_t macs, bool last = false) {
    os << "  \"" << name << "\": {\"ops\": " << ops << ", \"macs\": " << macs
       << ", \"flops\": " << flops_per_mac * static_cast<double>(macs) << "}" << (last ? "\n" : ",\n");
  };
  os << "{\n";
  cat("fa", fa_ops(), fa_macs());
  cat("fb", fb_ops(), fb_macs());
  cat("mv", mv_ops(), mv_macs());
  cat("vv", vv_ops(), vv_macs());
  cat("residual_check", check_ops(), check_macs());
  cat("restart", restart_ops(), restart_macs());
  os << "  \"flops_per_mac\": " << flops_per_mac << ",\n";
  os << "  \"total_flops\": " << total_flops() << "\n}";
  return os.str();
}

SparseMatrix from_triplets(long n, std::vector<Triplet> t) {
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  SparseMatrix a;
  a.n = n;
  a.rowptr.assign(n + 1, 0);
  a.col.reserve(t.size());
  a.val.reserve(t.size());
  for (std::size_t k = 0; k < t.size();) {
    std::size_t e = k;
    cdouble sum = 0.0;
    while (e < t.size() && t[e].r == t[k].r && t[e].c == t[k].c) sum += t[e++].v;
    a.col.push_back(t[k].c);
    a.val.push_back(sum);
    ++a.rowptr[t[k].r + 1];
    k = e;
  }
  for (long i = 0; i < n; ++i) a.rowptr[i + 1] += a.rowptr[i];
  return a;
}

void write_matrix_market(const SparseMatrix& a, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(errc::generic, "cannot open '" + path + "' for writing");
  const bool real = a.is_real();
  os << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << " general\n";
  os << a.n << " " << a.n << " " << a.nnz() << "\n";
  os.precision(17);
  for (long r = 0; r < a.n; ++r)
    for (std::int64_t k = a.rowptr[r]; k < a.rowptr[r + 1]; ++k) {
      os << r + 1 << " " << a.col[k] + 1 << " " << a.val[k].real();
      if (!real) os << " " << a.val[k].imag();
      os << "\n";
    }
  if (!os) fail(errc::generic, "write failed for '" + path + "'");
}

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(errc::generic, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
    fail(errc::generic, "not a Matrix Market file: " + path);
  const bool complex_vals = line.find("complex") != std::string::npos;
  const bool pattern = line.find("pattern") != std::string::npos;
  if (pattern) fail(errc::generic, "pattern matrices not supported: " + path);
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '%') break;
  long rows = 0, cols = 0;
  std::int64_t nnz = 0;
  {
    std::istringstream hs(line);
    hs >> rows >> cols >> nnz;
    if (!hs || rows != cols) fail(errc::generic, "bad Matrix Market header in " + path);
  }
  std::vector<Triplet> t;
  t.reserve(nnz);
  for (std::int64_t k = 0; k < nnz; ++k) {
    long r, c;
    double re, im = 0.0;
    is >> r >> c >> re;
    if (complex_vals) is >> im;
    if (!is) fail(errc::generic, "truncated Matrix Market body in " + path);
    t.push_back({static_cast<std::int32_t>(r - 1), static_cast<std::int32_t>(c - 1), {re, im}});
  }
  return from_triplets(rows, std::move(t));
}

void write_matrix_market_vector(const std::vector<cdouble>& x, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(errc::generic, "cannot open '" + path + "' for writing");
  os << "%%MatrixMarket matrix array complex general\n";
  os << x.size() << " 1\n";
  os.precision(17);
  for (const cdouble& v : x) os << v.real() << " " << v.imag() << "\n";
}

}  // namespace rq
