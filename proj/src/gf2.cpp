#include "gf2.hpp"

#include <bit>

namespace gridsq::gf2 {

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t k = 0; k < w.size(); k++)
    if (w[k]) return (k << 6) + std::countr_zero(w[k]);
  return n;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; i++) {
    const BitVec& row = m.r[i];
    for (std::size_t k = 0; k < row.w.size(); k++) {
      std::uint64_t x = row.w[k];
      while (x) {
        std::size_t j = (k << 6) + std::countr_zero(x);
        x &= x - 1;
        t.r[j].set(i, true);
      }
    }
  }
  return t;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols != b.rows) throw GF2Error("gf2::mul: dimension mismatch");
  BitMatrix p(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; i++) {
    const BitVec& row = a.r[i];
    for (std::size_t k = 0; k < row.w.size(); k++) {
      std::uint64_t x = row.w[k];
      while (x) {
        std::size_t j = (k << 6) + std::countr_zero(x);
        x &= x - 1;
        p.r[i].xor_in(b.r[j]);
      }
    }
  }
  return p;
}

BitVec apply_rows(const BitMatrix& m, const BitVec& x) {
  BitVec y(m.cols);
  for (std::size_t k = 0; k < x.w.size(); k++) {
    std::uint64_t v = x.w[k];
    while (v) {
      std::size_t i = (k << 6) + std::countr_zero(v);
      v &= v - 1;
      y.xor_in(m.r[i]);
    }
  }
  return y;
}

BitVec apply(const BitMatrix& m, const BitVec& x) {
  BitVec y(m.rows);
  for (std::size_t i = 0; i < m.rows; i++)
    if (dot(m.r[i], x)) y.set(i, true);
  return y;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  res.R = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; col++) {
    std::size_t piv = rank;
    while (piv < m.rows && !res.R.r[piv].get(col)) piv++;
    if (piv == m.rows) continue;
    std::swap(res.R.r[rank], res.R.r[piv]);
    for (std::size_t i = 0; i < m.rows; i++)
      if (i != rank && res.R.r[i].get(col)) res.R.r[i].xor_in(res.R.r[rank]);
    res.pivots.push_back(col);
    rank++;
  }
  res.rank = rank;
  return res;
}

SolveResult solve(const BitMatrix& a, const BitVec& b) {
  if (b.n != a.rows) throw GF2Error("gf2::solve: rhs size mismatch");
  // augmented elimination
  BitMatrix aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; i++) {
    aug.r[i] = BitVec(a.cols + 1);
    for (std::size_t k = 0; k < a.r[i].w.size(); k++) aug.r[i].w[k] = a.r[i].w[k];
    if (b.get(i)) aug.r[i].set(a.cols, true);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols && rank < a.rows; col++) {
    std::size_t piv = rank;
    while (piv < a.rows && !aug.r[piv].get(col)) piv++;
    if (piv == a.rows) continue;
    std::swap(aug.r[rank], aug.r[piv]);
    for (std::size_t i = 0; i < a.rows; i++)
      if (i != rank && aug.r[i].get(col)) aug.r[i].xor_in(aug.r[rank]);
    pivots.push_back(col);
    rank++;
  }
  SolveResult res;
  for (std::size_t i = rank; i < a.rows; i++)
    if (aug.r[i].get(a.cols)) return res;  // inconsistent
  res.ok = true;
  res.x0 = BitVec(a.cols);
  for (std::size_t i = 0; i < rank; i++)
    if (aug.r[i].get(a.cols)) res.x0.set(pivots[i], true);
  // nullspace: one basis vector per free column
  std::vector<bool> is_pivot(a.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t col = 0; col < a.cols; col++) {
    if (is_pivot[col]) continue;
    BitVec v(a.cols);
    v.set(col, true);
    for (std::size_t i = 0; i < rank; i++)
      if (aug.r[i].get(col)) v.set(pivots[i], true);
    res.null_basis.push_back(std::move(v));
  }
  return res;
}

std::vector<BitVec> nullspace(const BitMatrix& a) {
  return solve(a, BitVec(a.rows)).null_basis;
}

BitVec Span::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows.size(); i++)
    if (v.get(pivots[i])) v.xor_in(rows[i]);
  return v;
}

bool Span::add(BitVec v) {
  v = reduce(std::move(v));
  std::size_t p = v.first_set();
  if (p == v.n) return false;
  // keep reduced echelon: clear bit p in existing rows
  for (std::size_t i = 0; i < rows.size(); i++)
    if (rows[i].get(p)) rows[i].xor_in(v);
  rows.push_back(std::move(v));
  pivots.push_back(p);
  return true;
}

HomologyResult homology(const BitMatrix& mk, const BitMatrix& mk1) {
  if (mk1.cols != mk.rows)
    throw GF2Error("gf2::homology: chain dimensions disagree");
  // boundaries span
  Span bdry(mk.rows);
  for (std::size_t i = 0; i < mk1.rows; i++) bdry.add(mk1.r[i]);
  // d^2 = 0: every boundary must be a cycle
  // cycles: null(Mk^T)
  std::vector<BitVec> cyc = nullspace(transpose(mk));
  Span cycspan(mk.rows);
  for (auto& z : cyc) cycspan.add(z);
  for (auto& row : bdry.rows)
    if (!cycspan.contains(row))
      throw GF2Error("gf2::homology: d^2 != 0 at this degree");
  HomologyResult res;
  Span acc(mk.rows);
  for (auto& row : bdry.rows) acc.add(row);
  for (auto& z : cyc)
    if (acc.add(z)) res.reps.push_back(z);
  res.rank = res.reps.size();
  return res;
}

}  // namespace gridsq::gf2
