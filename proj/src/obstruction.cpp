#include "obstruction.hpp"

#include "clifford.hpp"

namespace gridsq {

using pin::Clifford;
using pin::E;
using pin::eval_loop;
using pin::long_lift;
using pin::short_lift;

int o2(const GridDiagram& gr, const CDPGen& g, const SignAssignment& s,
       bool t31b_lemma_variant) {
  if (grading(g) != 3 || omega(g) > 3)
    throw GridError("o2: generator outside grading-3 omega<=3 range");
  switch (classify(gr, g)) {
    // Each value is the homotopy class of the framed boundary loop of the
    // corresponding 2-dimensional moduli space: types whose loop is
    // null-homotopic contribute 0, and the remaining types pick up rectangle
    // signs from their boundary decompositions.
    case Tax::T3_3a:
    case Tax::T3_3b:
    case Tax::T3_3c:
    case Tax::T3_2a:
    case Tax::T3_2b:
      // for partition-free domains every bubble stratum is crossed twice, so
      // all bubble contributions cancel and the loop is null-homotopic
      return 0;
    case Tax::T3_2c: {
      // omega <= 3 forces N = 1 here; larger N would need a separate
      // induction that this subcomplex never reaches
      for (int v : g.N)
        if (v > 1) throw GridError("o2: Type 3.2c with N >= 2 is out of range");
      return 0;
    }
    case Tax::T3_1a:
      return s(g.D);
    case Tax::T3_1b:
      // the boundary faces of this type depend only on the endpoints, so the
      // value must be constant in D, and the bubble-pair equations force the
      // constant to 0; the audit variant keeps the sign-dependent term, which
      // renders the frame system unsolvable and is retained as evidence
      return t31b_lemma_variant ? (1 + s(g.D)) & 1 : 0;
    case Tax::T3_0a:
    case Tax::T3_0b:
    case Tax::T3_0c:
      return 0;
    default:
      throw GridError("o2: unclassifiable grading-3 generator " + gen_key(g));
  }
}

// central boundary loop of the Type 3.1a moduli space, read off the local
// model: 8 short edges plus 2 long edges through the extra R+ coordinate
// (index 5); the long-edge orientations are fixed by the loop being scalar
// of sign -1
std::vector<Clifford> loop_31a() {
  return {short_lift(2, 1), short_lift(3, 2), short_lift(4, 3),
          long_lift(2, 5, 0), short_lift(1, 2), short_lift(1, 4),
          short_lift(4, 2), short_lift(3, 4), short_lift(3, 2),
          long_lift(3, 5, 0)};
}

std::vector<Clifford> loop_31b() {
  return {short_lift(3, 2), short_lift(4, 3), short_lift(2, 4), E(2, 1, 3),
          short_lift(4, 2), short_lift(3, 4), short_lift(2, 3),
          short_lift(1, 2), short_lift(3, 1), E(3, 4, 2),
          short_lift(1, 3), short_lift(2, 1)};
}

std::vector<Clifford> loop_30c() {
  return {short_lift(4, 2), E(4, 3, 5), short_lift(2, 4), E(2, 1, 5),
          short_lift(4, 2), E(4, 1, 3), short_lift(2, 4), E(2, 5, 3),
          short_lift(4, 2), E(4, 5, 1), short_lift(2, 4), E(2, 3, 1)};
}

int o2_pin_oracle(const GridDiagram& gr, const CDPGen& g,
                  const SignAssignment& s) {
  Tax t = classify(gr, g);
  int loop_class, quads;
  switch (t) {
    case Tax::T3_1a: loop_class = eval_loop(loop_31a()); quads = 5; break;
    case Tax::T3_1b: loop_class = eval_loop(loop_31b()); quads = 16; break;
    case Tax::T3_0c: loop_class = eval_loop(loop_30c()); quads = 0; break;
    default:
      throw GridError("o2_pin_oracle: unsupported taxonomy");
  }
  int sd = quads % 2 ? s(g.D) : 0;
  return (1 + loop_class + quads * sd) & 1;
}

}  // namespace gridsq
