#include "grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace gridsq {

static bool is_perm(const std::vector<int>& p, int n) {
  if ((int)p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void GridDiagram::validate() const {
  if (n < 2) throw GridError("grid: n must be >= 2");
  if (!is_perm(X, n)) throw GridError("grid: X is not a permutation of 0..n-1");
  if (!is_perm(O, n)) throw GridError("grid: O is not a permutation of 0..n-1");
  for (int i = 0; i < n; i++)
    if (X[i] == O[i])
      throw GridError("grid: X and O collide in column " + std::to_string(i));
}

GridDiagram GridDiagram::parse(const std::string& text) {
  GridDiagram g;
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw GridError("grid: empty input");
  if (text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
      throw GridError(std::string("grid: malformed JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw GridError("grid: missing integer field n");
    g.n = j["n"].get<int>();
    for (auto [name, dst] : {std::pair{"X", &g.X}, std::pair{"O", &g.O}}) {
      if (!j.contains(name) || !j[name].is_array())
        throw GridError(std::string("grid: missing array field ") + name);
      for (auto& v : j[name]) {
        if (!v.is_number_integer())
          throw GridError(std::string("grid: non-integer entry in ") + name);
        dst->push_back(v.get<int>());
      }
    }
  } else {
    std::istringstream in(text);
    if (!(in >> g.n)) throw GridError("grid: expected leading integer n");
    std::string tag;
    auto next_tag = [&in, &tag] {  // "/" separators are optional
      while (in >> tag)
        if (tag != "/") return true;
      return false;
    };
    if (!next_tag() || (tag != "X" && tag != "x"))
      throw GridError("grid: expected X row list");
    g.X.resize(g.n);
    for (int i = 0; i < g.n; i++)
      if (!(in >> g.X[i])) throw GridError("grid: short X row list");
    if (!next_tag() || (tag != "O" && tag != "o"))
      throw GridError("grid: expected O row list");
    g.O.resize(g.n);
    for (int i = 0; i < g.n; i++)
      if (!(in >> g.O[i])) throw GridError("grid: short O row list");
  }
  g.validate();
  return g;
}

std::string perm_str(const Perm& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); i++) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Domain constant_domain(int n, const Perm& x) {
  Domain d;
  d.n = n;
  d.from = d.to = x;
  d.c.assign(std::size_t(n) * n, 0);
  return d;
}

bool domain_valid(const Domain& d) {
  int n = d.n;
  for (int v : d.c)
    if (v < 0) return false;
  // double difference of coeffs at every lattice point must match the
  // endpoint 0-chains: c(i,r)-c(i-1,r)-c(i,r-1)+c(i-1,r-1) = [from_i=r]-[to_i=r]
  for (int i = 0; i < n; i++)
    for (int r = 0; r < n; r++) {
      int dd = d.at(i, r) - d.at(i - 1, r) - d.at(i, r - 1) + d.at(i - 1, r - 1);
      int want = (d.from[i] == r ? 1 : 0) - (d.to[i] == r ? 1 : 0);
      if (dd != want) return false;
    }
  return true;
}

int maslov(const Domain& d) {
  // 4x the sum of corner averages over the points of from and to
  long long s4 = 0;
  for (const Perm* p : {&d.from, &d.to})
    for (int i = 0; i < d.n; i++) {
      int r = (*p)[i];
      s4 += d.at(i - 1, r - 1) + d.at(i - 1, r) + d.at(i, r - 1) + d.at(i, r);
    }
  if (s4 % 4 != 0) throw GridError("maslov: non-integer index (invalid domain?)");
  return int(s4 / 4);
}

Domain compose(const Domain& d, const Domain& e) {
  if (d.to != e.from) throw GridError("compose: endpoint mismatch");
  Domain r = d;
  r.to = e.to;
  for (std::size_t k = 0; k < r.c.size(); k++) r.c[k] += e.c[k];
  return r;
}

std::optional<Domain> subtract_final(const Domain& d, const Domain& c) {
  if (c.to != d.to) return std::nullopt;
  Domain e = d;
  e.to = c.from;
  for (std::size_t k = 0; k < e.c.size(); k++) {
    e.c[k] -= c.c[k];
    if (e.c[k] < 0) return std::nullopt;
  }
  return e;
}

std::optional<Domain> subtract_initial(const Domain& d, const Domain& c) {
  if (c.from != d.from) return std::nullopt;
  Domain e = d;
  e.from = c.to;
  for (std::size_t k = 0; k < e.c.size(); k++) {
    e.c[k] -= c.c[k];
    if (e.c[k] < 0) return std::nullopt;
  }
  return e;
}

std::string domain_key(const Domain& d) {
  std::string s = perm_str(d.from) + ">" + perm_str(d.to) + ":";
  for (std::size_t k = 0; k < d.c.size(); k++) {
    if (k) s += ",";
    s += std::to_string(d.c[k]);
  }
  return s;
}

// v strictly inside the cyclic open interval (lo, hi); lo != hi
static bool in_open_cyc(int v, int lo, int hi, int n) {
  if (v == lo || v == hi) return false;
  int span = (hi - lo + n) % n;
  int off = (v - lo + n) % n;
  return off > 0 && off < span;
}

std::vector<Rect> rectangles_from(const GridDiagram& g, const Perm& x) {
  int n = g.n;
  std::vector<Rect> out;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      if (a == b) continue;
      // candidate rectangle with bl = (a, x[a]), tr = (b, x[b]):
      // columns a..b-1, rows x[a]..x[b]-1 (cyclically)
      int r1 = x[a], r2 = x[b];
      bool empty = true;
      for (int cc = (a + 1) % n; cc != b; cc = (cc + 1) % n)
        if (in_open_cyc(x[cc], r1, r2, n)) { empty = false; break; }
      if (!empty) continue;
      Rect rect;
      rect.i1 = a; rect.j1 = r1; rect.i2 = b; rect.j2 = r2;
      rect.dom.n = n;
      rect.dom.from = x;
      rect.dom.to = x;
      std::swap(rect.dom.to[a], rect.dom.to[b]);
      rect.dom.c.assign(std::size_t(n) * n, 0);
      for (int cc = a; cc != b; cc = (cc + 1) % n)
        for (int rr = r1; rr != r2; rr = (rr + 1) % n)
          rect.dom.ref(cc, rr) = 1;
      out.push_back(std::move(rect));
    }
  std::sort(out.begin(), out.end(),
            [](const Rect& u, const Rect& v) { return rect_id(u) < rect_id(v); });
  return out;
}

std::string rect_id(const Rect& r) {
  std::ostringstream os;
  os << "x=" << perm_str(r.dom.from) << ";bl=(" << r.i1 << "," << r.j1
     << ");tr=(" << r.i2 << "," << r.j2 << ")";
  return os.str();
}

std::string rect_id_of_domain(const Domain& d) {
  int n = d.n, p = -1, q = -1;
  for (int i = 0; i < n; i++)
    if (d.from[i] != d.to[i]) (p < 0 ? p : q) = i;
  if (q < 0) throw GridError("rect_id_of_domain: not a rectangle domain");
  Rect r;
  r.dom = d;
  if (d.at(p, d.from[p]) > 0) {
    r.i1 = p; r.j1 = d.from[p]; r.i2 = q; r.j2 = d.from[q];
  } else {
    r.i1 = q; r.j1 = d.from[q]; r.i2 = p; r.j2 = d.from[p];
  }
  return rect_id(r);
}

AnnulusInfo annulus_info(const GridDiagram& g, const Domain& d) {
  AnnulusInfo info;
  if (d.from != d.to) return info;
  int n = d.n;
  // full row?
  for (int r = 0; r < n; r++) {
    bool hit = true;
    for (std::size_t k = 0; k < d.c.size(); k++) {
      int row = int(k) % n;
      if (d.c[k] != (row == r ? 1 : 0)) { hit = false; break; }
    }
    if (hit) {
      for (int j = 0; j < n; j++)
        if (g.O[j] == r) { info.kind = AnnulusKind::Horizontal; info.j = j; }
      return info;
    }
  }
  // full column?
  for (int col = 0; col < n; col++) {
    bool hit = true;
    for (std::size_t k = 0; k < d.c.size(); k++) {
      if (d.c[k] != (int(k) / n == col ? 1 : 0)) { hit = false; break; }
    }
    if (hit) { info.kind = AnnulusKind::Vertical; info.j = col; return info; }
  }
  return info;
}

Domain annulus_h(const GridDiagram& g, int j, const Perm& x) {
  Domain d = constant_domain(g.n, x);
  for (int col = 0; col < g.n; col++) d.ref(col, g.O[j]) = 1;
  return d;
}

Domain annulus_v(const GridDiagram& g, int j, const Perm& x) {
  Domain d = constant_domain(g.n, x);
  for (int row = 0; row < g.n; row++) d.ref(j, row) = 1;
  return d;
}

std::vector<Domain> final_rectangles(const GridDiagram& g, const Domain& d) {
  std::vector<Domain> out;
  int n = d.n;
  for (int p = 0; p < n; p++)
    for (int q = p + 1; q < n; q++) {
      Perm y = d.to;
      std::swap(y[p], y[q]);
      for (const Rect& r : rectangles_from(g, y)) {
        if (r.dom.to != d.to) continue;
        if (subtract_final(d, r.dom)) out.push_back(r.dom);
      }
    }
  std::sort(out.begin(), out.end(), [](const Domain& u, const Domain& v) {
    return domain_key(u) < domain_key(v);
  });
  return out;
}

std::vector<Domain> initial_rectangles(const GridDiagram& g, const Domain& d) {
  std::vector<Domain> out;
  for (const Rect& r : rectangles_from(g, d.from))
    if (subtract_initial(d, r.dom)) out.push_back(r.dom);
  return out;
}

ContainsAnnulus contains_annulus(const GridDiagram& g, const Domain& d) {
  ContainsAnnulus res;
  for (int j = 0; j < g.n; j++)
    for (bool horiz : {true, false}) {
      Domain a = horiz ? annulus_h(g, j, d.from) : annulus_v(g, j, d.from);
      auto rem = subtract_initial(d, a);  // d = a * rem
      if (!rem) continue;
      // flag: rem is also the initial rectangle of the annulus, a = rem * s
      bool flag = true;
      for (std::size_t k = 0; k < a.c.size(); k++)
        if (a.c[k] < rem->c[k]) { flag = false; break; }
      if (!res.found || (flag && !res.initial_rect_flag)) {
        res.found = true;
        res.initial_rect_flag = flag;
        res.a = a;
      }
      if (res.initial_rect_flag) return res;
    }
  return res;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Domain> enumerate_domains(const GridDiagram& g, int mu_max,
                                      std::size_t budget) {
  std::unordered_set<std::string> seen;
  std::vector<Domain> out, frontier;
  for (const Perm& p : all_perms(g.n)) {
    Domain c = constant_domain(g.n, p);
    seen.insert(domain_key(c));
    out.push_back(c);
    frontier.push_back(std::move(c));
  }
  // cache rectangles per generator
  std::unordered_map<std::string, std::vector<Rect>> rcache;
  for (int level = 1; level <= mu_max; level++) {
    std::vector<Domain> next;
    for (const Domain& d : frontier) {
      auto it = rcache.find(perm_str(d.to));
      if (it == rcache.end())
        it = rcache.emplace(perm_str(d.to), rectangles_from(g, d.to)).first;
      for (const Rect& r : it->second) {
        Domain e = compose(d, r.dom);
        std::string key = domain_key(e);
        if (!seen.insert(std::move(key)).second) continue;
        if (seen.size() > budget)
          throw GridError("enumerate_domains: budget exceeded at " +
                          std::to_string(seen.size()) + " domains");
        out.push_back(e);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Domain& u, const Domain& v) {
    return domain_key(u) < domain_key(v);
  });
  return out;
}

int o_count(const GridDiagram& g, const Domain& d) {
  int t = 0;
  for (int j = 0; j < g.n; j++) t += d.at(j, g.O[j]);
  return t;
}

int x_count(const GridDiagram& g, const Domain& d) {
  int t = 0;
  for (int j = 0; j < g.n; j++) t += d.at(j, g.X[j]);
  return t;
}

std::vector<int> o_vector(const GridDiagram& g, const Domain& d) {
  std::vector<int> v(g.n);
  for (int j = 0; j < g.n; j++) v[j] = d.at(j, g.O[j]);
  return v;
}

std::vector<int> relative_maslov(const GridDiagram& g) {
  auto perms = all_perms(g.n);
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < perms.size(); i++) idx[perm_str(perms[i])] = i;
  std::vector<int> m(perms.size(), 0);
  std::vector<bool> done(perms.size(), false);
  Perm id(g.n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> queue{idx[perm_str(id)]};
  done[queue[0]] = true;
  for (std::size_t qi = 0; qi < queue.size(); qi++) {
    std::size_t cur = queue[qi];
    for (const Rect& r : rectangles_from(g, perms[cur])) {
      std::size_t to = idx[perm_str(r.dom.to)];
      int mt = m[cur] - (maslov(r.dom) - 2 * o_count(g, r.dom));
      if (!done[to]) {
        done[to] = true;
        m[to] = mt;
        queue.push_back(to);
      } else if (m[to] != mt) {
        throw GridError("relative_maslov: inconsistent grading graph");
      }
    }
  }
  for (bool b : done)
    if (!b) throw GridError("relative_maslov: generator graph not connected");
  return m;
}

}  // namespace gridsq
