#include "sign.hpp"

#include <algorithm>
#include <map>

#include "gf2.hpp"

namespace gridsq {

namespace {

struct SignSystem {
  std::vector<std::string> ids;                       // unknown order
  std::unordered_map<std::string, std::size_t> idx;
  std::vector<std::pair<std::vector<std::size_t>, int>> eqs;  // lhs ids, rhs
};

SignSystem build_system(const GridDiagram& g, std::size_t budget) {
  SignSystem sys;
  for (const Perm& p : all_perms(g.n))
    for (const Rect& r : rectangles_from(g, p)) {
      std::string id = rect_id(r);
      if (sys.idx.emplace(id, sys.ids.size()).second) sys.ids.push_back(id);
    }
  for (const Domain& d : enumerate_domains(g, 2, budget)) {
    if (maslov(d) != 2) continue;
    // decompositions d = R * S, one per initial rectangle
    std::vector<std::pair<std::size_t, std::size_t>> dec;
    for (const Domain& r : initial_rectangles(g, d)) {
      Domain s = *subtract_initial(d, r);
      dec.push_back({sys.idx.at(rect_id_of_domain(r)),
                     sys.idx.at(rect_id_of_domain(s))});
    }
    AnnulusInfo ai = annulus_info(g, d);
    if (ai.kind == AnnulusKind::NotAnnulus) {
      if (dec.size() != 2)
        throw GridError("sign: index-2 non-annulus domain with " +
                        std::to_string(dec.size()) + " decompositions: " +
                        domain_key(d));
      sys.eqs.push_back(
          {{dec[0].first, dec[0].second, dec[1].first, dec[1].second}, 1});
    } else {
      int rhs = ai.kind == AnnulusKind::Vertical ? 1 : 0;
      for (auto& [ri, si] : dec) sys.eqs.push_back({{ri, si}, rhs});
    }
  }
  return sys;
}

}  // namespace

SignAssignment solve_sign(const GridDiagram& g,
                          const std::vector<std::pair<std::string, int>>& pins,
                          std::size_t budget) {
  SignSystem sys = build_system(g, budget);
  std::size_t ncols = sys.ids.size();
  gf2::BitMatrix a(sys.eqs.size() + pins.size(), ncols);
  gf2::BitVec b(a.rows);
  for (std::size_t i = 0; i < sys.eqs.size(); i++) {
    for (std::size_t j : sys.eqs[i].first) a[i].flip(j);
    if (sys.eqs[i].second) b.set(i, true);
  }
  for (std::size_t p = 0; p < pins.size(); p++) {
    auto it = sys.idx.find(pins[p].first);
    if (it == sys.idx.end())
      throw GridError("sign: pin names unknown rectangle " + pins[p].first);
    a[sys.eqs.size() + p].set(it->second, true);
    if (pins[p].second & 1) b.set(sys.eqs.size() + p, true);
  }
  gf2::SolveResult res = gf2::solve(a, b);
  if (!res.ok)
    throw GridError("sign: no solution (sign assignment must exist; "
                    "inconsistent pins or internal error)");
  SignAssignment s;
  for (std::size_t j = 0; j < ncols; j++) s.s[sys.ids[j]] = res.x0.get(j);
  auto bad = verify_sign(g, s, budget);
  if (!bad.empty()) throw GridError("sign: post-solve verification failed: " + bad[0]);
  return s;
}

SignAssignment gauge_transform(const GridDiagram& g, const SignAssignment& s,
                               const std::unordered_map<std::string, int>& h) {
  auto hv = [&](const Perm& p) {
    auto it = h.find(perm_str(p));
    return it == h.end() ? 0 : (it->second & 1);
  };
  SignAssignment out = s;
  for (const Perm& p : all_perms(g.n))
    for (const Rect& r : rectangles_from(g, p)) {
      std::string id = rect_id(r);
      out.s[id] = (s.of_id(id) + hv(r.dom.from) + hv(r.dom.to)) & 1;
    }
  return out;
}

std::vector<std::string> verify_sign(const GridDiagram& g, const SignAssignment& s,
                                     std::size_t budget) {
  std::vector<std::string> bad;
  for (const Domain& d : enumerate_domains(g, 2, budget)) {
    if (maslov(d) != 2) continue;
    std::vector<std::pair<int, int>> dec;
    for (const Domain& r : initial_rectangles(g, d))
      dec.push_back({s(r), s(*subtract_initial(d, r))});
    AnnulusInfo ai = annulus_info(g, d);
    if (ai.kind == AnnulusKind::NotAnnulus) {
      if (dec.size() != 2 ||
          ((dec[0].first + dec[0].second + dec[1].first + dec[1].second) & 1) != 1)
        bad.push_back("square rule violated at " + domain_key(d));
    } else {
      int rhs = ai.kind == AnnulusKind::Vertical ? 1 : 0;
      for (auto& [a, b] : dec)
        if (((a + b) & 1) != rhs)
          bad.push_back("annulus rule violated at " + domain_key(d));
    }
  }
  return bad;
}

}  // namespace gridsq
