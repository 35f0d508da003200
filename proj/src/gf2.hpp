#pragma once
// Bit-packed GF(2) linear algebra: rref, solve, nullspace, homology of
// chain complexes. Dense 64-bit-word rows; everything here is mod 2.
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsq::gf2 {

struct BitVec {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : n(nbits), w((nbits + 63) / 64, 0) {}

  bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void xor_in(const BitVec& o) {
    for (std::size_t k = 0; k < w.size(); k++) w[k] ^= o.w[k];
  }
  bool any() const {
    for (auto x : w) if (x) return true;
    return false;
  }
  std::size_t popcount() const;
  // index of first set bit, or n if none
  std::size_t first_set() const;
  bool operator==(const BitVec&) const = default;
};

inline bool dot(const BitVec& a, const BitVec& b) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < a.w.size(); k++) acc ^= a.w[k] & b.w[k];
  return __builtin_parityll(acc);
}

struct BitMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BitVec> r;

  BitMatrix() = default;
  BitMatrix(std::size_t nr, std::size_t nc) : rows(nr), cols(nc), r(nr, BitVec(nc)) {}
  BitVec& operator[](std::size_t i) { return r[i]; }
  const BitVec& operator[](std::size_t i) const { return r[i]; }
  bool get(std::size_t i, std::size_t j) const { return r[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r[i].set(j, v); }
  bool operator==(const BitMatrix&) const = default;
};

BitMatrix transpose(const BitMatrix& m);
// (A: r x m) * (B: m x c), rows of the product are xors of B's rows
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
// y = M^T x, i.e. combine rows of M selected by x
BitVec apply_rows(const BitMatrix& m, const BitVec& x);
// y_i = <row_i, x>
BitVec apply(const BitMatrix& m, const BitVec& x);

struct RrefResult {
  BitMatrix R;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};
RrefResult rref(const BitMatrix& m);

struct SolveResult {
  bool ok = false;        // false: no solution
  BitVec x0;              // particular solution, free vars zero
  std::vector<BitVec> null_basis;
};
// solve A x = b
SolveResult solve(const BitMatrix& a, const BitVec& b);
std::vector<BitVec> nullspace(const BitMatrix& a);

// Incremental row-space accumulator (echelon form kept reduced on insert).
struct Span {
  std::size_t cols = 0;
  std::vector<BitVec> rows;            // echelon rows
  std::vector<std::size_t> pivots;
  explicit Span(std::size_t nc) : cols(nc) {}
  // reduce v by the span; returns the residual
  BitVec reduce(BitVec v) const;
  // returns true if v was independent (and adds it)
  bool add(BitVec v);
  std::size_t rank() const { return rows.size(); }
  bool contains(const BitVec& v) const { return !reduce(v).any(); }
};

struct GF2Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HomologyResult {
  std::size_t rank = 0;
  std::vector<BitVec> reps;  // cycles whose classes form a basis
};
// Chain-complex convention used throughout: a boundary matrix Mk has one row
// per degree-k basis element holding its boundary over the degree-(k-1)
// basis. Cycles at degree k = null(Mk^T); boundaries = row space of Mk1.
// Checks d^2 = 0 (every row of Mk1 reduced through Mk must vanish).
HomologyResult homology(const BitMatrix& mk, const BitMatrix& mk1);

}  // namespace gridsq::gf2
