// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rigaqep/types.hpp"

namespace rq {

/// CSR sparse matrix over complex scalars. Column indices sorted per row,
/// no duplicates; explicit zeros may be stored (shared-pattern convention).
struct SparseMatrix {
  long n = 0;  // square
  std::vector<std::int64_t> rowptr;
  std::vector<std::int32_t> col;
  std::vector<cdouble> val;

  std::int64_t nnz() const { return static_cast<std::int64_t>(col.size()); }
  static SparseMatrix identity(long n);
  /// Entry lookup (binary search); zero when absent.
  cdouble at(long r, long c) const;
  /// Count of entries with nonzero stored value.
  std::int64_t nnz_numeric() const;
  /// Max absolute column sum.
  double norm1() const;
  /// Max absolute entry.
  double norm_max() const;
  bool is_real() const;
};

/// Lightweight non-owning CSR view; the spmv/counters API works on views so a
/// pencil can expose K, C, M on one shared pattern without copies.
struct CsrView {
  long n = 0;
  const std::int64_t* rowptr = nullptr;
  const std::int32_t* col = nullptr;
  const cdouble* val = nullptr;
  std::int64_t nnz = 0;

  CsrView() = default;
  CsrView(const SparseMatrix& a)
      : n(a.n), rowptr(a.rowptr.data()), col(a.col.data()), val(a.val.data()), nnz(a.nnz()) {}
};

/// Four-category operation ledger: factorizations (fa), forward/backward
/// eliminations (fb), matrix-vector (mv) and vector-vector (vv) products.
/// Each category tracks the number of operations and a multiply-add tally;
/// FLOPs are reported as multiply-adds times a configurable constant
/// (default 8 real floating ops per complex multiply-add). Products spent on
/// explicit residual verification and on restart basis compression sit in
/// separate aux tallies so the four Krylov-projection categories stay
/// comparable with their call-count laws.
class CostLedger {
public:
  static constexpr double kDefaultFlopsPerMac = 8.0;

  void add_fa(std::uint64_t macs) { bump(fa_ops_, fa_macs_, macs); }
  void add_fb(std::uint64_t macs) { bump(fb_ops_, fb_macs_, macs); }
  void add_mv(std::uint64_t macs) { bump(mv_ops_, mv_macs_, macs); }
  void add_vv(std::uint64_t macs) { bump(vv_ops_, vv_macs_, macs); }
  void add_check(std::uint64_t macs) { bump(chk_ops_, chk_macs_, macs); }
  void add_restart(std::uint64_t macs) { bump(rst_ops_, rst_macs_, macs); }

  std::uint64_t fa_ops() const { return fa_ops_.load(); }
  std::uint64_t fb_ops() const { return fb_ops_.load(); }
  std::uint64_t mv_ops() const { return mv_ops_.load(); }
  std::uint64_t vv_ops() const { return vv_ops_.load(); }
  std::uint64_t check_ops() const { return chk_ops_.load(); }
  std::uint64_t restart_ops() const { return rst_ops_.load(); }

  std::uint64_t fa_macs() const { return fa_macs_.load(); }
  std::uint64_t fb_macs() const { return fb_macs_.load(); }
  std::uint64_t mv_macs() const { return mv_macs_.load(); }
  std::uint64_t vv_macs() const { return vv_macs_.load(); }
  std::uint64_t check_macs() const { return chk_macs_.load(); }
  std::uint64_t restart_macs() const { return rst_macs_.load(); }

  double flops_per_mac = kDefaultFlopsPerMac;
  double fa_flops() const { return flops_per_mac * static_cast<double>(fa_macs()); }
  double fb_flops() const { return flops_per_mac * static_cast<double>(fb_macs()); }
  double mv_flops() const { return flops_per_mac * static_cast<double>(mv_macs()); }
  double vv_flops() const { return flops_per_mac * static_cast<double>(vv_macs()); }
  double total_flops() const { return fa_flops() + fb_flops() + mv_flops() + vv_flops(); }

  void reset();
  /// Counter snapshot serialized as a JSON object string.
  std::string to_json() const;

private:
  static void bump(std::atomic<std::uint64_t>& ops, std::atomic<std::uint64_t>& macs,
                   std::uint64_t m) {
    ops.fetch_add(1, std::memory_order_relaxed);
    macs.fetch_add(m, std::memory_order_relaxed);
  }
  std::atomic<std::uint64_t> fa_ops_{0}, fb_ops_{0}, mv_ops_{0}, vv_ops_{0}, chk_ops_{0},
      rst_ops_{0};
  std::atomic<std::uint64_t> fa_macs_{0}, fb_macs_{0}, mv_macs_{0}, vv_macs_{0}, chk_macs_{0},
      rst_macs_{0};
};

/// y = A * x; charges one mv operation of nnz(A) multiply-adds.
void spmv(const CsrView& a, const cdouble* x, cdouble* y, CostLedger* ledger);
inline void spmv(const SparseMatrix& a, const std::vector<cdouble>& x, std::vector<cdouble>& y,
                 CostLedger* ledger) {
  if (static_cast<long>(x.size()) != a.n) fail(errc::dimension, "spmv dimension mismatch");
  y.resize(a.n);
  spmv(CsrView(a), x.data(), y.data(), ledger);
}

/// Conjugating dot product (first argument conjugated); one vv op of n MACs.
cdouble dot(const cdouble* x, const cdouble* y, std::size_t n, CostLedger* ledger);
inline cdouble dot(const std::vector<cdouble>& x, const std::vector<cdouble>& y,
                   CostLedger* ledger) {
  if (x.size() != y.size()) fail(errc::dimension, "dot dimension mismatch");
  return dot(x.data(), y.data(), x.size(), ledger);
}

/// y += a * x; one vv op of n MACs.
void axpy(cdouble a, const cdouble* x, cdouble* y, std::size_t n, CostLedger* ledger);
inline void axpy(cdouble a, const std::vector<cdouble>& x, std::vector<cdouble>& y,
                 CostLedger* ledger) {
  if (x.size() != y.size()) fail(errc::dimension, "axpy dimension mismatch");
  axpy(a, x.data(), y.data(), x.size(), ledger);
}

// --- triplet assembly -------------------------------------------------------

struct Triplet {
  std::int32_t r, c;
  cdouble v;
};

/// Compress triplets into CSR, summing duplicates. Entries with zero value are
/// kept (pattern entries).
SparseMatrix from_triplets(long n, std::vector<Triplet> triplets);

// --- Matrix Market exchange format ------------------------------------------

void write_matrix_market(const SparseMatrix& a, const std::string& path);
SparseMatrix read_matrix_market(const std::string& path);
void write_matrix_market_vector(const std::vector<cdouble>& x, const std::string& path);

}  // namespace rq
