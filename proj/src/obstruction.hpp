#pragma once
// The obstruction cochain o2 on grading-3 generators of the omega<=3
// subcomplex: closed-form values per taxonomy, plus an independent Pin-loop
// oracle for the unit-bubble cases (Types 3.1a, 3.1b, 3.0c).
#include "cdp.hpp"
#include "clifford.hpp"
#include "sign.hpp"

namespace gridsq {

// Type 3.1b default is 0 (the reconciled boundary-loop value); the
// alternative closed form 1 + s(D) is kept behind the flag for audit.
int o2(const GridDiagram& gr, const CDPGen& g, const SignAssignment& s,
       bool t31b_lemma_variant = false);

// boundary-loop evaluation via Clifford lifts; applicable taxonomy:
// T3_1a, T3_1b, T3_0c (unit bubbles only)
int o2_pin_oracle(const GridDiagram& gr, const CDPGen& g, const SignAssignment& s);

// the central boundary loops of the local models, as Pin lift scripts
std::vector<pin::Clifford> loop_31a();
std::vector<pin::Clifford> loop_31b();
std::vector<pin::Clifford> loop_30c();

}  // namespace gridsq
