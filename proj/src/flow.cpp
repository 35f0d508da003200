#include "flow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace gridsq {

namespace {

bool blocked(const GridDiagram& g, const FlowOptions& opt, const Domain& d) {
  if (opt.block_x && x_count(g, d) > 0) return true;
  std::vector<int> ov = o_vector(g, d);
  for (int j : opt.block_o)
    if (ov[j] > 0) return true;
  return false;
}

std::string point_key(std::size_t a, const std::string& rect) {
  return std::to_string(a) + "#" + rect;
}

}  // namespace

std::string flow_object_key(const FlowObject& o) {
  std::ostringstream ss;
  ss << perm_str(o.x) << "|u=(";
  for (std::size_t i = 0; i < o.u.size(); i++)
    ss << (i ? "," : "") << o.u[i];
  ss << ")";
  return ss.str();
}

std::vector<std::size_t> FlowCategory::objects_at(int gr) const {
  std::vector<std::size_t> out;
  if (gr < min_gr || gr > max_gr) return out;
  auto [b, e] = gr_range[gr - min_gr];
  for (std::size_t i = b; i < e; i++) out.push_back(i);
  return out;
}

std::size_t FlowCategory::pos_in_grading(std::size_t obj) const {
  return obj - gr_range[objects[obj].gr - min_gr].first;
}

FlowCategory build_flow_category(const GridDiagram& g, const SignAssignment& s,
                                 const FrameAssignment& f,
                                 const FlowOptions& opt) {
  FlowCategory fc;
  fc.g = g;
  fc.opt = opt;
  fc.s = s;
  fc.f = f;
  for (int j : opt.block_o)
    if (j < 0 || j >= g.n) throw GridError("flow: blocked O index out of range");

  auto perms = all_perms(g.n);
  std::vector<int> mrel = relative_maslov(g);
  std::unordered_map<std::string, int> mrel_of;
  for (std::size_t i = 0; i < perms.size(); i++)
    mrel_of[perm_str(perms[i])] = mrel[i];

  std::vector<bool> free_coord(g.n, true);
  for (int j : opt.block_o) free_coord[j] = false;

  // exponent vectors with sum <= trunc, zero on blocked coordinates
  std::vector<std::vector<int>> us;
  std::vector<int> u(g.n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == g.n) {
      us.push_back(u);
      return;
    }
    int hi = free_coord[i] ? left : 0;
    for (int v = 0; v <= hi; v++) {
      u[i] = v;
      self(self, i + 1, left - v);
    }
    u[i] = 0;
  };
  rec(rec, 0, opt.trunc);

  if (perms.size() * us.size() > opt.budget)
    throw GridError("flow: object count exceeds budget");
  for (const Perm& p : perms)
    for (const auto& uu : us)
      fc.objects.push_back({p, uu, mrel_of[perm_str(p)] + 2 * int(std::accumulate(
                                        uu.begin(), uu.end(), 0))});
  std::sort(fc.objects.begin(), fc.objects.end(),
            [](const FlowObject& a, const FlowObject& b) {
              if (a.gr != b.gr) return a.gr < b.gr;
              return flow_object_key(a) < flow_object_key(b);
            });
  for (std::size_t i = 0; i < fc.objects.size(); i++)
    fc.obj_index[flow_object_key(fc.objects[i])] = i;
  fc.min_gr = fc.objects.front().gr;
  fc.max_gr = fc.objects.back().gr;
  fc.gr_range.assign(fc.max_gr - fc.min_gr + 1, {0, 0});
  for (std::size_t i = 0; i < fc.objects.size();) {
    std::size_t j = i;
    while (j < fc.objects.size() && fc.objects[j].gr == fc.objects[i].gr) j++;
    fc.gr_range[fc.objects[i].gr - fc.min_gr] = {i, j};
    i = j;
  }

  // look up (x, u) with the exponent drop of a domain; npos if it leaves the
  // positive quadrant
  auto target = [&](const FlowObject& o, const Domain& d) -> std::size_t {
    FlowObject t{d.to, o.u, 0};
    std::vector<int> ov = o_vector(g, d);
    for (int j = 0; j < g.n; j++) {
      t.u[j] -= ov[j];
      if (t.u[j] < 0) return std::size_t(-1);
    }
    auto it = fc.obj_index.find(flow_object_key(t));
    return it == fc.obj_index.end() ? std::size_t(-1) : it->second;
  };

  // per-generator caches: rectangles and index-2 non-annulus domains
  std::unordered_map<std::string, std::vector<Rect>> rcache;
  std::unordered_map<std::string, std::vector<Domain>> d2cache;
  auto rects_of = [&](const Perm& x) -> const std::vector<Rect>& {
    auto it = rcache.find(perm_str(x));
    if (it == rcache.end())
      it = rcache.emplace(perm_str(x), rectangles_from(g, x)).first;
    return it->second;
  };

  fc.points_from.assign(fc.objects.size(), {});
  fc.intervals_from.assign(fc.objects.size(), {});
  std::unordered_map<std::string, std::size_t> point_index;

  for (std::size_t a = 0; a < fc.objects.size(); a++) {
    const FlowObject& oa = fc.objects[a];
    for (const Rect& r : rects_of(oa.x)) {
      if (blocked(g, opt, r.dom)) continue;
      std::size_t b = target(oa, r.dom);
      if (b == std::size_t(-1)) continue;
      std::string id = rect_id(r);
      point_index[point_key(a, id)] = fc.points.size();
      fc.points_from[a].push_back(fc.points.size());
      fc.points.push_back({a, b, id, s.of_id(id)});
      if (fc.points.size() > opt.budget)
        throw GridError("flow: point count exceeds budget");
    }
  }

  auto point_of = [&](std::size_t a, const Domain& r) {
    auto it = point_index.find(point_key(a, rect_id_of_domain(r)));
    if (it == point_index.end())
      throw GridError("flow: missing endpoint rectangle point");
    return it->second;
  };

  // endpoints of the interval over domain d based at object a: one product
  // (p, q) per decomposition d = R * S
  auto make_interval = [&](std::size_t a, const Domain& d, int frame,
                           const std::string& key) {
    std::size_t c = target(fc.objects[a], d);
    if (c == std::size_t(-1)) return;
    ModInterval iv;
    iv.a = a;
    iv.c = c;
    iv.frame = frame;
    iv.key = key;
    std::vector<Domain> inits = initial_rectangles(g, d);
    if (inits.size() != 2)
      throw GridError("flow: interval domain without two decompositions " +
                      domain_key(d));
    int sgn = 0;
    for (int k = 0; k < 2; k++) {
      Domain rest = *subtract_initial(d, inits[k]);
      std::size_t b = target(fc.objects[a], inits[k]);
      if (b == std::size_t(-1))
        throw GridError("flow: interval endpoint leaves the quadrant");
      std::size_t p = point_of(a, inits[k]);
      std::size_t q = point_of(b, rest);
      iv.ends[k] = {p, q};
      sgn += fc.points[p].sign + fc.points[q].sign;
    }
    if (sgn % 2 != 1)
      throw GridError("flow: interval endpoint signs do not sum to 1 at " + key);
    fc.intervals_from[a].push_back(fc.intervals.size());
    fc.intervals.push_back(std::move(iv));
    if (fc.intervals.size() > opt.budget)
      throw GridError("flow: interval count exceeds budget");
  };

  for (std::size_t a = 0; a < fc.objects.size(); a++) {
    const FlowObject& oa = fc.objects[a];
    std::string pk = perm_str(oa.x);
    auto it = d2cache.find(pk);
    if (it == d2cache.end()) {
      std::vector<Domain> d2;
      std::unordered_map<std::string, bool> seen;
      for (const Rect& r : rects_of(oa.x))
        for (const Rect& t : rects_of(r.dom.to)) {
          Domain d = compose(r.dom, t.dom);
          if (maslov(d) != 2) throw GridError("flow: Maslov additivity broken");
          if (annulus_info(g, d).kind != AnnulusKind::NotAnnulus) continue;
          if (seen.emplace(domain_key(d), true).second) d2.push_back(std::move(d));
        }
      it = d2cache.emplace(pk, std::move(d2)).first;
    }
    for (const Domain& d : it->second) {
      if (blocked(g, opt, d)) continue;
      make_interval(a, d, f.of_domain(d), domain_key(d));
    }
    // the two annuli over O_j glue into one interval with the summed frame
    for (int j = 0; j < g.n; j++) {
      Domain h = annulus_h(g, j, oa.x);
      Domain v = annulus_v(g, j, oa.x);
      if (blocked(g, opt, h) || blocked(g, opt, v)) continue;
      std::size_t c = target(oa, h);
      if (c == std::size_t(-1)) continue;
      ModInterval iv;
      iv.a = a;
      iv.c = c;
      iv.frame = (f.of_domain(h) + f.of_domain(v)) & 1;
      iv.key = "glue(" + std::to_string(j) + ")@" + perm_str(oa.x);
      int sgn = 0;
      const Domain* ann[2] = {&h, &v};
      for (int k = 0; k < 2; k++) {
        std::vector<Domain> inits = initial_rectangles(g, *ann[k]);
        if (inits.size() != 1)
          throw GridError("flow: annulus without a unique decomposition");
        Domain rest = *subtract_initial(*ann[k], inits[0]);
        std::size_t b = target(oa, inits[0]);
        if (b == std::size_t(-1))
          throw GridError("flow: annulus endpoint leaves the quadrant");
        std::size_t p = point_of(a, inits[0]);
        std::size_t q = point_of(b, rest);
        iv.ends[k] = {p, q};
        sgn += fc.points[p].sign + fc.points[q].sign;
      }
      if (sgn % 2 != 1)
        throw GridError("flow: glued interval signs do not sum to 1 at " + iv.key);
      fc.intervals_from[a].push_back(fc.intervals.size());
      fc.intervals.push_back(std::move(iv));
    }
  }

  // morphisms drop the grading by exactly one
  for (const ModPoint& p : fc.points)
    if (fc.objects[p.a].gr != fc.objects[p.b].gr + 1)
      throw GridError("flow: point does not drop grading by 1");
  for (const ModInterval& iv : fc.intervals)
    if (fc.objects[iv.a].gr != fc.objects[iv.c].gr + 2)
      throw GridError("flow: interval does not drop grading by 2");
  return fc;
}

gf2::BitMatrix flow_boundary_matrix(const FlowCategory& fc, int gr) {
  auto rows_ix = fc.objects_at(gr);
  auto cols_ix = fc.objects_at(gr - 1);
  gf2::BitMatrix m(rows_ix.size(), cols_ix.size());
  for (std::size_t i = 0; i < rows_ix.size(); i++)
    for (std::size_t pi : fc.points_from[rows_ix[i]])
      m[i].flip(fc.pos_in_grading(fc.points[pi].b));
  return m;
}

gf2::HomologyResult flow_cohomology(const FlowCategory& fc, int gr) {
  return gf2::homology(gf2::transpose(flow_boundary_matrix(fc, gr + 1)),
                       gf2::transpose(flow_boundary_matrix(fc, gr)));
}

gf2::BitVec sq2_cochain(const FlowCategory& fc, int gr, const gf2::BitVec& phi,
                        const Sq2Options& opt) {
  auto cg = fc.objects_at(gr);
  auto cg2 = fc.objects_at(gr + 2);
  if (phi.n != cg.size()) throw GridError("sq2: cochain size mismatch");
  std::vector<bool> supp(fc.objects.size(), false);
  for (std::size_t i = 0; i < cg.size(); i++)
    if (phi.get(i)) supp[cg[i]] = true;

  std::mt19937_64 rng(opt.seed);
  gf2::BitVec out(cg2.size());

  for (std::size_t ai = 0; ai < cg2.size(); ai++) {
    std::size_t a = cg2[ai];
    // vertices: products (p, q), p in M(a, b), q in M(b, c) with c in supp
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> vid;
    std::vector<std::pair<std::size_t, std::size_t>> verts;
    struct Edge {
      std::size_t v1, v2;
      int label;
      int dir;  // 0 undirected, 1 toward v2
    };
    std::vector<Edge> edges;

    std::vector<std::size_t> bs;  // intermediate objects, in point order
    for (std::size_t pi : fc.points_from[a]) {
      std::size_t b = fc.points[pi].b;
      bool any = false;
      for (std::size_t qi : fc.points_from[b])
        if (supp[fc.points[qi].b]) {
          verts.push_back({pi, qi});
          any = true;
        }
      if (any && std::find(bs.begin(), bs.end(), b) == bs.end())
        bs.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); i++) vid[verts[i]] = i;

    // matching edges: pair up the points of M(b, -) landing in supp, then
    // connect (p, q1)-(p, q2) for every p in M(a, b)
    for (std::size_t b : bs) {
      std::vector<std::size_t> qs;
      for (std::size_t qi : fc.points_from[b])
        if (supp[fc.points[qi].b]) qs.push_back(qi);
      if (qs.size() % 2)
        throw GridError("sq2: phi is not a cocycle (odd point count)");
      if (opt.randomize_matching) std::shuffle(qs.begin(), qs.end(), rng);
      for (std::size_t k = 0; k + 1 < qs.size(); k += 2) {
        std::size_t q1 = qs[k], q2 = qs[k + 1];
        int dir = fc.points[q1].sign == fc.points[q2].sign ? 1 : 0;
        for (std::size_t pi : fc.points_from[a])
          if (fc.points[pi].b == b)
            edges.push_back({vid.at({pi, q1}), vid.at({pi, q2}), 0, dir});
      }
    }
    // interval edges
    for (std::size_t ii : fc.intervals_from[a]) {
      const ModInterval& iv = fc.intervals[ii];
      if (!supp[iv.c]) continue;
      edges.push_back({vid.at(iv.ends[0]), vid.at(iv.ends[1]), iv.frame, 0});
    }

    std::vector<std::vector<std::size_t>> adj(verts.size());
    for (std::size_t e = 0; e < edges.size(); e++) {
      adj[edges[e].v1].push_back(e);
      adj[edges[e].v2].push_back(e);
    }
    for (const auto& inc : adj)
      if (inc.size() != 2)
        throw GridError("sq2: Gamma graph vertex degree != 2");

    // every component is a cycle; walk it once in a chosen orientation
    int total = 0;
    std::vector<bool> used(edges.size(), false);
    for (std::size_t v0 = 0; v0 < verts.size(); v0++) {
      if (adj[v0].empty() || used[adj[v0][0]]) continue;
      int comp = 1;
      std::size_t v = v0;
      std::size_t e = adj[v0][0];
      bool flip = opt.randomize_direction && (rng() & 1);
      do {
        used[e] = true;
        std::size_t w = edges[e].v1 == v ? edges[e].v2 : edges[e].v1;
        comp += edges[e].label;
        if (edges[e].dir) {
          bool along = edges[e].v2 == w;
          if (flip) along = !along;
          if (along) comp++;
        }
        v = w;
        e = adj[v][0] == e ? adj[v][1] : adj[v][0];
      } while (v != v0);
      total += comp;
    }
    if (total & 1) out.set(ai, true);
  }
  return out;
}

Sq2Map sq2_map(const FlowCategory& fc, int gr, const Sq2Options& opt) {
  gf2::HomologyResult from = flow_cohomology(fc, gr);
  gf2::HomologyResult to = flow_cohomology(fc, gr + 2);
  Sq2Map sm;
  sm.gr = gr;
  sm.rank_from = from.rank;
  sm.rank_to = to.rank;
  std::size_t n2 = fc.objects_at(gr + 2).size();
  std::size_t n1 = fc.objects_at(gr + 1).size();
  sm.m = gf2::BitMatrix(to.rank, from.rank);
  if (from.rank == 0) return sm;
  // columns: cohomology reps at gr+2 followed by the coboundary generators
  gf2::BitMatrix cob = flow_boundary_matrix(fc, gr + 2);  // n2 x n1
  gf2::BitMatrix sys(n2, to.rank + n1);
  for (std::size_t i = 0; i < n2; i++) {
    for (std::size_t k = 0; k < to.rank; k++)
      if (to.reps[k].get(i)) sys[i].set(k, true);
    for (std::size_t k = 0; k < n1; k++)
      if (cob.get(i, k)) sys[i].set(to.rank + k, true);
  }
  for (std::size_t col = 0; col < from.rank; col++) {
    gf2::BitVec sq = sq2_cochain(fc, gr, from.reps[col], opt);
    // sq must be a cocycle
    gf2::BitMatrix d3 = flow_boundary_matrix(fc, gr + 3);
    for (std::size_t i = 0; i < d3.rows; i++)
      if (gf2::dot(d3[i], sq))
        throw GridError("sq2: sq^phi is not a cocycle");
    gf2::SolveResult res = gf2::solve(sys, sq);
    if (!res.ok) throw GridError("sq2: sq^phi not expressible in cohomology");
    for (std::size_t k = 0; k < to.rank; k++)
      if (res.x0.get(k)) sm.m.set(k, col, true);
  }
  return sm;
}

std::vector<Sq2Summary> sq2_all(const GridDiagram& g, const SignAssignment& s,
                                const FrameAssignment& f, const FlowOptions& opt,
                                const Sq2Options& sopt) {
  FlowCategory fc = build_flow_category(g, s, f, opt);
  FlowOptions opt1 = opt;
  opt1.trunc = opt.trunc + 1;
  opt1.budget = opt.budget * 4;
  FlowCategory fc1 = build_flow_category(g, s, f, opt1);
  std::vector<Sq2Summary> out;
  for (int gr = fc.min_gr; gr <= fc.max_gr - 2; gr++) {
    Sq2Summary sum;
    sum.map = sq2_map(fc, gr, sopt);
    sum.stable = sum.map == sq2_map(fc1, gr, sopt);
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<std::string> validate_coherence(const FlowCategory& fc) {
  std::vector<std::string> bad;
  for (std::size_t a = 0; a < fc.objects.size(); a++) {
    // boundary intervals of the 2-dimensional moduli from a, grouped by the
    // bottom object c; vertices are point triples
    struct Edge {
      std::array<std::size_t, 3> t1, t2;
      int label;
    };
    std::map<std::size_t, std::vector<Edge>> by_c;
    for (std::size_t pi : fc.points_from[a]) {
      const ModPoint& p = fc.points[pi];
      for (std::size_t ii : fc.intervals_from[p.b]) {
        // lower interval, upper point: plain frame label
        const ModInterval& iv = fc.intervals[ii];
        by_c[iv.c].push_back({{pi, iv.ends[0].first, iv.ends[0].second},
                              {pi, iv.ends[1].first, iv.ends[1].second},
                              iv.frame & 1});
      }
    }
    for (std::size_t ii : fc.intervals_from[a]) {
      // upper interval, lower point q: label 1 + s(q) + frame
      const ModInterval& iv = fc.intervals[ii];
      for (std::size_t qi : fc.points_from[iv.c])
        by_c[fc.points[qi].b].push_back(
            {{iv.ends[0].first, iv.ends[0].second, qi},
             {iv.ends[1].first, iv.ends[1].second, qi},
             (1 + fc.points[qi].sign + iv.frame) & 1});
    }
    for (auto& [c, edges] : by_c) {
      std::map<std::array<std::size_t, 3>, std::vector<std::size_t>> adj;
      for (std::size_t e = 0; e < edges.size(); e++) {
        adj[edges[e].t1].push_back(e);
        adj[edges[e].t2].push_back(e);
      }
      bool ok = true;
      for (auto& [t, inc] : adj)
        if (inc.size() != 2) ok = false;
      if (!ok) {
        bad.push_back("open 2-moduli boundary between " +
                      flow_object_key(fc.objects[a]) + " and " +
                      flow_object_key(fc.objects[c]));
        continue;
      }
      // sum of (1 + sum of labels) over the cycle components
      int total = 0;
      std::vector<bool> used(edges.size(), false);
      for (auto& [t0, inc0] : adj) {
        if (used[inc0[0]]) continue;
        total += 1;
        auto v = t0;
        std::size_t e = inc0[0];
        do {
          used[e] = true;
          total += edges[e].label;
          auto w = edges[e].t1 == v ? edges[e].t2 : edges[e].t1;
          v = w;
          auto& inc = adj[v];
          e = inc[0] == e ? inc[1] : inc[0];
        } while (v != t0);
      }
      if (total & 1)
        bad.push_back("coherence parity failed between " +
                      flow_object_key(fc.objects[a]) + " and " +
                      flow_object_key(fc.objects[c]));
    }
  }
  return bad;
}

}  // namespace gridsq
