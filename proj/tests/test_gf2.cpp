#include <doctest.h>

#include <random>

#include "gf2.hpp"

using namespace gridsq::gf2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                        double density = 0.5) {
  BitMatrix m(r, c);
  std::bernoulli_distribution bit(density);
  for (std::size_t i = 0; i < r; i++)
    for (std::size_t j = 0; j < c; j++)
      if (bit(rng)) m.set(i, j, true);
  return m;
}

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t i = 0; i < n; i++)
    if (bit(rng)) v.set(i, true);
  return v;
}

}  // namespace

TEST_CASE("bitvec basics") {
  BitVec v(130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  CHECK(v.popcount() == 3);
  CHECK(v.first_set() == 0);
  v.flip(0);
  CHECK(v.first_set() == 64);
  BitVec w(130);
  w.set(64, true);
  v.xor_in(w);
  CHECK(v.popcount() == 1);
  CHECK(v.get(129));
}

TEST_CASE("rref rank and reduced form") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; t++) {
    BitMatrix m = random_matrix(rng, 17, 23);
    RrefResult rr = rref(m);
    CHECK(rr.rank == rr.pivots.size());
    // pivot columns have a single 1, in the pivot row
    for (std::size_t i = 0; i < rr.rank; i++) {
      std::size_t p = rr.pivots[i];
      for (std::size_t k = 0; k < rr.R.rows; k++)
        CHECK(rr.R.get(k, p) == (k == i));
    }
    // row space is preserved: every original row reduces to zero
    Span sp(m.cols);
    for (std::size_t i = 0; i < rr.rank; i++) sp.add(rr.R[i]);
    for (std::size_t i = 0; i < m.rows; i++) CHECK(sp.contains(m[i]));
  }
}

TEST_CASE("solve: particular solution and null basis") {
  std::mt19937_64 rng(5);
  int solvable = 0;
  for (int t = 0; t < 40; t++) {
    BitMatrix a = random_matrix(rng, 14, 19);
    BitVec b = random_vec(rng, 14);
    SolveResult sr = solve(a, b);
    if (!sr.ok) continue;
    solvable++;
    CHECK(apply(a, sr.x0) == b);
    for (const BitVec& nb : sr.null_basis) {
      CHECK(nb.any());
      CHECK_FALSE(apply(a, nb).any());
    }
    CHECK(sr.null_basis.size() == nullspace(a).size());
  }
  CHECK(solvable > 0);
}

TEST_CASE("solve detects inconsistency") {
  BitMatrix a(2, 2);
  a.set(0, 0, true);
  a.set(1, 0, true);  // rows equal, rhs differs
  BitVec b(2);
  b.set(0, true);
  CHECK_FALSE(solve(a, b).ok);
}

TEST_CASE("mul/apply/apply_rows/transpose consistency") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; t++) {
    BitMatrix a = random_matrix(rng, 9, 13);
    BitMatrix b = random_matrix(rng, 13, 11);
    BitMatrix ab = mul(a, b);
    BitVec x = random_vec(rng, 11);
    // (AB)x = A(Bx)
    CHECK(apply(ab, x) == apply(a, apply(b, x)));
    // apply_rows(M, x) = M^T x = apply(transpose(M), x)
    BitVec y = random_vec(rng, 9);
    CHECK(apply_rows(a, y) == apply(transpose(a), y));
  }
}

TEST_CASE("span add/reduce") {
  std::mt19937_64 rng(3);
  BitMatrix m = random_matrix(rng, 12, 16);
  Span sp(16);
  std::size_t added = 0;
  for (std::size_t i = 0; i < m.rows; i++)
    if (sp.add(m[i])) added++;
  CHECK(added == sp.rank());
  CHECK(added == rref(m).rank);
  for (std::size_t i = 0; i < m.rows; i++) CHECK(sp.contains(m[i]));
}

TEST_CASE("homology of a hand complex") {
  // chain complex over bases of sizes 4 <- 5 <- 3:
  // d1: 5 rows over 4 cols, d2: 3 rows over 5 cols with d1 after d2 = 0
  BitMatrix d1(5, 4), d2(3, 5);
  // pentagon-ish: e_i -> v_i + v_{i+1 mod 4} on first four edges,
  // e_4 a loop contribution (zero boundary)
  for (std::size_t i = 0; i < 4; i++) {
    d1.set(i, i, true);
    d1.set(i, (i + 1) % 4, true);
  }
  // faces hitting edge cycles: f0 = e0+e1+e2+e3 (boundary 0), f1 = e4? e4
  // has zero boundary so any face may cover it
  for (std::size_t j = 0; j < 4; j++) d2.set(0, j, true);
  d2.set(1, 4, true);
  d2.set(2, 4, true);
  HomologyResult h = homology(d1, d2);
  // cycles at degree 1: null(d1^T) has dim 5 - rank(d1) = 5 - 3 = 2;
  // boundaries: rank(d2) = 2; both cycle classes killed -> rank 0
  CHECK(h.rank == 0);

  // without faces H1 has rank 2
  HomologyResult h2 = homology(d1, BitMatrix(0, 5));
  CHECK(h2.rank == 2);
  for (const BitVec& rep : h2.reps) CHECK_FALSE(apply_rows(d1, rep).any());
}

TEST_CASE("homology rejects d^2 != 0") {
  BitMatrix d1(1, 1), d2(1, 1);
  d1.set(0, 0, true);
  d2.set(0, 0, true);
  CHECK_THROWS_AS(homology(d1, d2), GF2Error);
}
