// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rq {

using cdouble = std::complex<double>;

/// Error categories; the CLI maps them to distinct process exit codes.
enum class errc : int {
  generic = 1,
  config = 2,
  assembly = 3,
  solver = 4,
  verification = 5,
  domain = 6,
  dimension = 7,
  singular = 8,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

/// Domain boundary edges of an axis-aligned box.
enum class Edge : unsigned { left = 0, right = 1, bottom = 2, top = 3 };

/// Small set of box edges.
class EdgeSet {
public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(unsigned bits) : bits_(bits & 0xFu) {}
  static constexpr EdgeSet all() { return EdgeSet(0xFu); }
  constexpr bool contains(Edge e) const { return bits_ & (1u << static_cast<unsigned>(e)); }
  constexpr EdgeSet& add(Edge e) {
    bits_ |= (1u << static_cast<unsigned>(e));
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned bits() const { return bits_; }
  friend constexpr bool operator==(EdgeSet a, EdgeSet b) { return a.bits_ == b.bits_; }

private:
  unsigned bits_ = 0;
};

}  // namespace rq
