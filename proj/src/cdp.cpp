#include "cdp.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gridsq {

PartitionMoves partition_moves(const Partition& p) {
  PartitionMoves m;
  for (std::size_t k = 0; k <= p.size(); k++) {
    Partition q = p;
    q.insert(q.begin() + k, 1);
    m.ue.push_back(std::move(q));
  }
  for (std::size_t k = 0; k + 1 < p.size(); k++) {
    Partition q;
    q.insert(q.end(), p.begin(), p.begin() + k);
    q.push_back(p[k] + p[k + 1]);
    q.insert(q.end(), p.begin() + k + 2, p.end());
    m.ec.push_back(std::move(q));
  }
  if (!p.empty()) {
    m.ir.push_back(Partition(p.begin() + 1, p.end()));
    m.fr.push_back(Partition(p.begin(), p.end() - 1));
  }
  return m;
}

int grading(const CDPGen& g) {
  int len = 0;
  for (auto& l : g.lam) len += (int)l.size();
  return maslov(g.D) + len;
}

int omega(const CDPGen& g) {
  int tot = 0;
  for (int v : g.N) tot += v;
  return maslov(g.D) + tot;
}

std::string gen_key(const CDPGen& g) {
  std::string s = domain_key(g.D) + ";N=";
  for (std::size_t j = 0; j < g.N.size(); j++) {
    if (j) s += ",";
    s += std::to_string(g.N[j]);
  }
  s += ";lam=";
  for (std::size_t j = 0; j < g.lam.size(); j++) {
    s += "(";
    for (std::size_t k = 0; k < g.lam[j].size(); k++) {
      if (k) s += ",";
      s += std::to_string(g.lam[j][k]);
    }
    s += ")";
  }
  return s;
}

CDPGen make_gen(const Domain& d) {
  CDPGen g;
  g.D = d;
  g.N.assign(d.n, 0);
  g.lam.assign(d.n, {});
  return g;
}

void check_gen(const CDPGen& g) {
  if ((int)g.N.size() != g.D.n || (int)g.lam.size() != g.D.n)
    throw GridError("cdp: decoration size mismatch");
  for (int j = 0; j < g.D.n; j++) {
    int s = 0;
    for (int part : g.lam[j]) {
      if (part < 1) throw GridError("cdp: non-positive partition part");
      s += part;
    }
    if (s != g.N[j]) throw GridError("cdp: lambda does not partition N");
  }
}

const char* tax_name(Tax t) {
  switch (t) {
    case Tax::T1_0: return "1.0";   case Tax::T1_1: return "1.1";
    case Tax::T2_0a: return "2.0a"; case Tax::T2_0b: return "2.0b";
    case Tax::T2_1: return "2.1";   case Tax::T2_2a: return "2.2a";
    case Tax::T2_2b: return "2.2b"; case Tax::T3_0a: return "3.0a";
    case Tax::T3_0b: return "3.0b"; case Tax::T3_0c: return "3.0c";
    case Tax::T3_1a: return "3.1a"; case Tax::T3_1b: return "3.1b";
    case Tax::T3_2a: return "3.2a"; case Tax::T3_2b: return "3.2b";
    case Tax::T3_2c: return "3.2c"; case Tax::T3_3a: return "3.3a";
    case Tax::T3_3b: return "3.3b"; case Tax::T3_3c: return "3.3c";
    default: return "other";
  }
}

Tax classify(const GridDiagram& gr, const CDPGen& g) {
  int k = grading(g);
  int mu = maslov(g.D);
  std::vector<int> js;  // indices carrying bubbles
  int parts = 0;
  for (int j = 0; j < g.D.n; j++)
    if (!g.lam[j].empty()) { js.push_back(j); parts += (int)g.lam[j].size(); }
  if (k == 1) {
    if (mu == 1) return Tax::T1_1;
    if (mu == 0 && js.size() == 1) return Tax::T1_0;
    return Tax::Other;
  }
  if (k == 2) {
    if (mu == 2)
      return annulus_info(gr, g.D).kind == AnnulusKind::NotAnnulus ? Tax::T2_2a
                                                                   : Tax::T2_2b;
    if (mu == 1) return Tax::T2_1;
    if (mu == 0) return js.size() == 1 ? Tax::T2_0a : Tax::T2_0b;
    return Tax::Other;
  }
  if (k == 3) {
    if (mu == 3) {
      ContainsAnnulus ca = contains_annulus(gr, g.D);
      if (!ca.found) return Tax::T3_3a;
      return ca.initial_rect_flag ? Tax::T3_3b : Tax::T3_3c;
    }
    if (mu == 2) {
      AnnulusInfo ai = annulus_info(gr, g.D);
      if (ai.kind == AnnulusKind::NotAnnulus) return Tax::T3_2a;
      return (js.size() == 1 && ai.j == js[0]) ? Tax::T3_2c : Tax::T3_2b;
    }
    if (mu == 1) return js.size() == 1 ? Tax::T3_1a : Tax::T3_1b;
    if (mu == 0) {
      if (js.size() == 1) return Tax::T3_0a;
      if (js.size() == 2) return Tax::T3_0b;
      if (js.size() == 3) return Tax::T3_0c;
    }
    return Tax::Other;
  }
  return Tax::Other;
}

std::vector<CDPGen> differential(const GridDiagram& gr, const CDPGen& g) {
  std::map<std::string, std::pair<CDPGen, int>> acc;
  auto emit = [&](CDPGen t) {
    std::string key = gen_key(t);
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, std::make_pair(std::move(t), 1));
    else it->second.second ^= 1;
  };
  // type I: strip an initial or final rectangle
  for (const Domain& r : initial_rectangles(gr, g.D)) {
    CDPGen t = g;
    t.D = *subtract_initial(g.D, r);
    emit(std::move(t));
  }
  for (const Domain& r : final_rectangles(gr, g.D)) {
    CDPGen t = g;
    t.D = *subtract_final(g.D, r);
    emit(std::move(t));
  }
  // type II: absorb a trailing annulus H_j or V_j into a new bubble
  for (int j = 0; j < gr.n; j++)
    for (bool horiz : {true, false}) {
      Domain a = horiz ? annulus_h(gr, j, g.D.to) : annulus_v(gr, j, g.D.to);
      auto e = subtract_final(g.D, a);
      if (!e) continue;
      for (Partition& q : partition_moves(g.lam[j]).ue) {
        CDPGen t = g;
        t.D = *e;
        t.N[j] += 1;
        t.lam[j] = q;
        emit(std::move(t));
      }
    }
  // type III: coarsen a partition
  for (int j = 0; j < gr.n; j++)
    for (Partition& q : partition_moves(g.lam[j]).ec) {
      CDPGen t = g;
      t.lam[j] = q;
      emit(std::move(t));
    }
  // type IV: drop the first or last part of a partition
  for (int j = 0; j < gr.n; j++) {
    if (g.lam[j].empty()) continue;
    PartitionMoves m = partition_moves(g.lam[j]);
    {
      CDPGen t = g;
      t.N[j] -= g.lam[j].front();
      t.lam[j] = m.ir[0];
      emit(std::move(t));
    }
    {
      CDPGen t = g;
      t.N[j] -= g.lam[j].back();
      t.lam[j] = m.fr[0];
      emit(std::move(t));
    }
  }
  std::vector<CDPGen> out;
  for (auto& [key, tc] : acc)
    if (tc.second) out.push_back(std::move(tc.first));
  return out;
}

// ordered compositions of m into parts >= 1
static std::vector<Partition> compositions(int m) {
  std::vector<Partition> out;
  if (m == 0) { out.push_back({}); return out; }
  std::function<void(int, Partition&)> rec = [&](int rem, Partition& cur) {
    if (rem == 0) { out.push_back(cur); return; }
    for (int p = 1; p <= rem; p++) {
      cur.push_back(p);
      rec(rem - p, cur);
      cur.pop_back();
    }
  };
  Partition cur;
  rec(m, cur);
  return out;
}

SubComplex build_subcomplex(const GridDiagram& gr, int omega_max,
                            std::size_t budget) {
  SubComplex sc;
  sc.n = gr.n;
  sc.omega_max = omega_max;
  sc.basis.assign(omega_max + 1, {});
  std::vector<Domain> doms = enumerate_domains(gr, omega_max, budget);
  for (const Domain& d : doms) {
    int mu = maslov(d);
    int nmax = omega_max - mu;
    // all bubble decorations with |N| <= nmax
    std::function<void(int, int, CDPGen&)> rec = [&](int j, int rem, CDPGen& g) {
      if (j == gr.n) {
        int k = grading(g);
        if (k <= omega_max) sc.basis[k].push_back(g);
        return;
      }
      for (int nj = 0; nj <= rem; nj++)
        for (Partition& comp : compositions(nj)) {
          g.N[j] = nj;
          g.lam[j] = comp;
          rec(j + 1, rem - nj, g);
        }
      g.N[j] = 0;
      g.lam[j].clear();
    };
    CDPGen g = make_gen(d);
    rec(0, nmax, g);
  }
  sc.index.assign(omega_max + 1, {});
  for (int k = 0; k <= omega_max; k++) {
    std::sort(sc.basis[k].begin(), sc.basis[k].end(),
              [](const CDPGen& a, const CDPGen& b) {
                return gen_key(a) < gen_key(b);
              });
    for (std::size_t i = 0; i < sc.basis[k].size(); i++)
      sc.index[k][gen_key(sc.basis[k][i])] = i;
  }
  sc.bnd.assign(omega_max + 1, {});
  for (int k = 1; k <= omega_max; k++) {
    sc.bnd[k] = gf2::BitMatrix(sc.basis[k].size(), sc.basis[k - 1].size());
    for (std::size_t i = 0; i < sc.basis[k].size(); i++) {
      const CDPGen& g = sc.basis[k][i];
      int og = omega(g);
      for (const CDPGen& t : differential(gr, g)) {
        if (grading(t) != k - 1)
          throw GridError("cdp: differential term grading != k-1");
        if (omega(t) > og)
          throw GridError("cdp: differential not omega-monotone");
        auto it = sc.index[k - 1].find(gen_key(t));
        if (it == sc.index[k - 1].end())
          throw GridError("cdp: subcomplex not closed under differential");
        sc.bnd[k][i].flip(it->second);
      }
    }
  }
  return sc;
}

}  // namespace gridsq
