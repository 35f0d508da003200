#include "frame.hpp"

#include <numeric>

#include "obstruction.hpp"

namespace gridsq {

namespace {

// (c_Id, e_j + e_k, ((1)_j, (1)_k))
CDPGen pair_gen(const GridDiagram& gr, int j, int k) {
  Perm id(gr.n);
  std::iota(id.begin(), id.end(), 0);
  CDPGen g = make_gen(constant_domain(gr.n, id));
  g.N[j] = g.N[k] = 1;
  g.lam[j] = {1};
  g.lam[k] = {1};
  return g;
}

}  // namespace

gf2::BitVec frame_row(const SubComplex& sc, std::size_t i) {
  gf2::BitVec row = sc.bnd[3][i];
  const CDPGen& g = sc.basis[3][i];
  bool plain = true;
  for (int v : g.N) plain &= v == 0;
  if (plain) {
    // drop the bubble faces: they are the only faces with a nonzero N
    for (std::size_t j = 0; j < sc.basis[2].size(); j++) {
      if (!row.get(j)) continue;
      for (int v : sc.basis[2][j].N)
        if (v != 0) {
          row.flip(j);
          break;
        }
    }
  }
  return row;
}

FrameAssignment solve_frame(const GridDiagram& gr, const SubComplex& sc,
                            const SignAssignment& s, int extra_pin_value,
                            bool t31b_lemma_variant) {
  const std::size_t m2 = sc.basis[2].size();
  std::vector<gf2::BitVec> rows;
  std::vector<bool> rhs;
  for (std::size_t i = 0; i < sc.basis[3].size(); i++) {
    rows.push_back(frame_row(sc, i));
    rhs.push_back(o2(gr, sc.basis[3][i], s, t31b_lemma_variant));
  }
  FrameAssignment fa;
  fa.variant = extra_pin_value;
  // unit-pair bubble classes pinned to 0
  for (int j = 0; j < gr.n; j++)
    for (int k = j + 1; k < gr.n; k++) {
      CDPGen pg = pair_gen(gr, j, k);
      auto it = sc.index[2].find(gen_key(pg));
      if (it == sc.index[2].end())
        throw GridError("frame: pair generator missing from basis");
      if (sc.bnd[2][it->second].any())
        throw GridError("frame: pair generator is not a cycle");
      gf2::BitVec row(m2);
      row.set(it->second, true);
      rows.push_back(std::move(row));
      rhs.push_back(false);
      fa.pinned_cycles.push_back(gen_key(pg));
    }
  // completion of the H2 basis beyond the pair classes, pinned to the variant
  gf2::HomologyResult h2 = gf2::homology(sc.bnd[2], sc.bnd[3]);
  gf2::Span span(m2);
  for (std::size_t i = 0; i < sc.bnd[3].rows; i++) span.add(sc.bnd[3][i]);
  for (int j = 0; j < gr.n; j++)
    for (int k = j + 1; k < gr.n; k++) {
      gf2::BitVec v(m2);
      v.set(sc.index[2].at(gen_key(pair_gen(gr, j, k))), true);
      if (!span.add(std::move(v)))
        throw GridError("frame: pair classes dependent in H2");
    }
  int completions = 0;
  for (auto& rep : h2.reps)
    if (span.add(rep)) {
      completions++;
      rows.push_back(rep);
      rhs.push_back(extra_pin_value & 1);
    }
  if (completions != 1)
    throw GridError("frame: expected exactly one completion class, got " +
                    std::to_string(completions));
  gf2::BitMatrix a(rows.size(), m2);
  gf2::BitVec b(rows.size());
  for (std::size_t i = 0; i < rows.size(); i++) {
    a[i] = std::move(rows[i]);
    if (rhs[i]) b.set(i, true);
  }
  gf2::SolveResult res = gf2::solve(a, b);
  if (!res.ok)
    throw GridError("frame: no solution (frame assignment must exist; "
                    "obstruction or differential bug)");
  fa.vec = res.x0;
  for (std::size_t i = 0; i < m2; i++)
    fa.f[gen_key(sc.basis[2][i])] = res.x0.get(i);
  auto bad = verify_frame(gr, sc, s, fa, t31b_lemma_variant);
  if (!bad.empty())
    throw GridError("frame: post-solve verification failed at " + bad[0]);
  return fa;
}

bool coboundary_equivalent(const SubComplex& sc, const FrameAssignment& f1,
                           const FrameAssignment& f2) {
  gf2::BitVec d = f1.vec;
  d.xor_in(f2.vec);
  return gf2::solve(sc.bnd[2], d).ok;
}

FrameAssignment frame_gauge(const SubComplex& sc, const FrameAssignment& f,
                            const gf2::BitVec& h) {
  FrameAssignment out = f;
  for (std::size_t i = 0; i < sc.basis[2].size(); i++)
    if (gf2::dot(sc.bnd[2][i], h)) {
      out.vec.flip(i);
      out.f[gen_key(sc.basis[2][i])] ^= 1;
    }
  return out;
}

std::vector<std::string> verify_frame(const GridDiagram& gr, const SubComplex& sc,
                                      const SignAssignment& s,
                                      const FrameAssignment& f,
                                      bool t31b_lemma_variant) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < sc.basis[3].size(); i++) {
    bool lhs = gf2::dot(frame_row(sc, i), f.vec);
    if (lhs != (o2(gr, sc.basis[3][i], s, t31b_lemma_variant) & 1))
      bad.push_back(gen_key(sc.basis[3][i]));
  }
  return bad;
}

}  // namespace gridsq
