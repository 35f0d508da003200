#pragma once
// Sign assignments on rectangles over GF(2): one bit per empty rectangle
// subject to the Square rule (index-2 non-annulus domains) and the Annuli
// rule (vertical = 1, horizontal = 0). Bubble signs s_j are fixed to 0.
#include <string>
#include <unordered_map>
#include <vector>

#include "grid.hpp"

namespace gridsq {

struct SignAssignment {
  std::unordered_map<std::string, int> s;  // rect ID -> bit

  int of_id(const std::string& id) const {
    auto it = s.find(id);
    if (it == s.end()) throw GridError("sign: unknown rectangle " + id);
    return it->second;
  }
  int operator()(const Domain& rect) const { return of_id(rect_id_of_domain(rect)); }
};

// one equation per decomposition of each index-2 domain; pins appended;
// throws GridError on NoSolution (existence is a theorem) or bad pins
SignAssignment solve_sign(const GridDiagram& g,
                          const std::vector<std::pair<std::string, int>>& pins = {},
                          std::size_t budget = 1000000);

// s'(R) = s(R) + h(R.from) + h(R.to); h keyed by perm_str
SignAssignment gauge_transform(const GridDiagram& g, const SignAssignment& s,
                               const std::unordered_map<std::string, int>& h);

// exhaustive Square/Annuli verification; returns list of violated equations
std::vector<std::string> verify_sign(const GridDiagram& g, const SignAssignment& s,
                                     std::size_t budget = 1000000);

}  // namespace gridsq
