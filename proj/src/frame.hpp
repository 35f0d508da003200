#pragma once
// Frame assignment: solve the GF(2) system (coboundary of f) = o2 over the
// grading-2 basis of the omega<=3 subcomplex, with the unit-pair bubble
// classes pinned to 0 and the computed completion of the H2 basis pinned to
// extra_pin_value (two inequivalent variants).
#include <string>
#include <unordered_map>
#include <vector>

#include "cdp.hpp"
#include "gf2.hpp"
#include "sign.hpp"

namespace gridsq {

struct FrameAssignment {
  int variant = 0;  // the extra_pin_value used
  std::unordered_map<std::string, int> f;  // gen_key (grading 2) -> bit
  gf2::BitVec vec;                         // same data over the basis order
  std::vector<std::string> pinned_cycles;  // keys of pinned pair classes

  int of_key(const std::string& key) const {
    auto it = f.find(key);
    if (it == f.end()) throw GridError("frame: unknown generator " + key);
    return it->second;
  }
  int of_domain(const Domain& d) const { return of_key(gen_key(make_gen(d))); }
};

// Frame-equation row for grading-3 basis element i. For a partition-free
// index-3 domain the boundary of its 2-dimensional moduli space crosses each
// bubble stratum twice (the annulus can degenerate on either side of the
// complementary rectangle), so the bubble terms cancel from the frame
// equation even though the chain differential records each face once.
gf2::BitVec frame_row(const SubComplex& sc, std::size_t i);

FrameAssignment solve_frame(const GridDiagram& gr, const SubComplex& sc,
                            const SignAssignment& s, int extra_pin_value,
                            bool t31b_lemma_variant = false);

// is f1 - f2 a coboundary of a 1-cochain?
bool coboundary_equivalent(const SubComplex& sc, const FrameAssignment& f1,
                           const FrameAssignment& f2);

// f + (coboundary of h), h over the grading-1 basis
FrameAssignment frame_gauge(const SubComplex& sc, const FrameAssignment& f,
                            const gf2::BitVec& h);

// residual check: all grading-3 equations; returns violated generator keys
std::vector<std::string> verify_frame(const GridDiagram& gr, const SubComplex& sc,
                                      const SignAssignment& s,
                                      const FrameAssignment& f,
                                      bool t31b_lemma_variant = false);

}  // namespace gridsq
