#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "grid.hpp"

using namespace gridsq;

namespace {

GridDiagram unknot2() { return GridDiagram::parse(R"({"n":2,"X":[1,0],"O":[0,1]})"); }

GridDiagram twist3() { return GridDiagram::parse(R"({"n":3,"X":[1,2,0],"O":[0,1,2]})"); }

bool in_cyc(int v, int lo, int hi, int n) {  // v in cyclic [lo, hi), lo != hi
  v = ((v % n) + n) % n;
  for (int k = lo; k % n != hi % n; k++)
    if (k % n == v) return true;
  return false;
}

// independent enumeration of empty rectangles from x: every ordered pair of
// generator points (p, x[p]) bottom-left, (q, x[q]) top-right with no other
// point interior to the cyclic spans
std::multiset<std::string> oracle_rect_keys(const GridDiagram& g, const Perm& x) {
  std::multiset<std::string> keys;
  int n = g.n;
  for (int p = 0; p < n; p++)
    for (int q = 0; q < n; q++) {
      if (p == q) continue;
      int j1 = x[p], j2 = x[q];
      bool empty = true;
      for (int i = 0; i < n && empty; i++) {
        if (i == p || i == q) continue;
        if (in_cyc(i, p, q, n) && in_cyc(x[i], j1, j2, n) &&
            i % n != p && x[i] != j1)
          empty = false;
      }
      if (!empty) continue;
      Domain d;
      d.n = n;
      d.from = x;
      d.to = x;
      std::swap(d.to[p], d.to[q]);
      d.c.assign(std::size_t(n) * n, 0);
      for (int col = 0; col < n; col++)
        for (int row = 0; row < n; row++)
          if (in_cyc(col, p, q, n) && in_cyc(row, j1, j2, n))
            d.ref(col, row) = 1;
      keys.insert(domain_key(d));
    }
  return keys;
}

bool decomposes_into_rectangles(const GridDiagram& g, const Domain& d, int mu) {
  if (mu == 0) return d.is_constant();
  for (const Domain& r : initial_rectangles(g, d)) {
    auto rest = subtract_initial(d, r);
    if (rest && decomposes_into_rectangles(g, *rest, mu - 1)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse both forms and validation errors") {
  GridDiagram g = unknot2();
  CHECK(g.n == 2);
  GridDiagram g2 = GridDiagram::parse("2 / X 1 0 / O 0 1");
  CHECK(g2.X == g.X);
  CHECK(g2.O == g.O);
  CHECK_THROWS_AS(GridDiagram::parse(R"({"n":2,"X":[1,1],"O":[0,1]})").validate(),
                  GridError);  // X not a permutation
  CHECK_THROWS_AS(GridDiagram::parse(R"({"n":2,"X":[0,1],"O":[0,1]})").validate(),
                  GridError);  // X and O share cells
  CHECK_THROWS_AS(GridDiagram::parse(R"({"n":2,"X":[1,0]})"), GridError);
  CHECK_THROWS_AS(GridDiagram::parse("nonsense"), GridError);
}

TEST_CASE("rectangles match the brute-force oracle") {
  for (const GridDiagram& g : {unknot2(), twist3(),
                               GridDiagram::parse("4 / X 1 2 3 0 / O 0 1 2 3")}) {
    for (const Perm& x : all_perms(g.n)) {
      std::multiset<std::string> got;
      for (const Rect& r : rectangles_from(g, x)) {
        CHECK(domain_valid(r.dom));
        CHECK(maslov(r.dom) == 1);
        got.insert(domain_key(r.dom));
      }
      CHECK(got == oracle_rect_keys(g, x));
    }
  }
}

TEST_CASE("unknot 2x2 rectangle anatomy") {
  GridDiagram g = unknot2();
  Perm id{0, 1}, tau{1, 0};
  auto from_id = rectangles_from(g, id);
  auto from_tau = rectangles_from(g, tau);
  REQUIRE(from_id.size() == 2);
  REQUIRE(from_tau.size() == 2);
  // cells: O1 at (0,0), O2 at (1,1), X at (0,1) and (1,0)
  for (const Rect& r : from_id) {
    CHECK(r.dom.total() == 1);
    bool o1 = r.dom.at(0, 0) == 1, o2 = r.dom.at(1, 1) == 1;
    CHECK((o1 || o2));
    CHECK(r.dom.to == tau);
  }
  for (const Rect& r : from_tau) {
    bool x1 = r.dom.at(0, 1) == 1, x2 = r.dom.at(1, 0) == 1;
    CHECK((x1 || x2));
    CHECK(r.dom.to == id);
  }
}

TEST_CASE("maslov additivity on random composable pairs") {
  std::mt19937_64 rng(2024);
  for (const GridDiagram& g : {unknot2(), twist3()}) {
    auto doms = enumerate_domains(g, 2);
    REQUIRE(!doms.empty());
    // bucket by source permutation
    std::map<std::string, std::vector<const Domain*>> by_from;
    for (const Domain& d : doms) by_from[perm_str(d.from)].push_back(&d);
    std::uniform_int_distribution<std::size_t> pick(0, doms.size() - 1);
    int done = 0;
    while (done < 1000) {
      const Domain& d = doms[pick(rng)];
      auto& cand = by_from[perm_str(d.to)];
      if (cand.empty()) continue;
      const Domain& e = *cand[rng() % cand.size()];
      Domain de = compose(d, e);
      CHECK(maslov(de) == maslov(d) + maslov(e));
      done++;
    }
  }
}

TEST_CASE("low-index domains decompose into rectangles") {
  for (const GridDiagram& g : {unknot2(), twist3()}) {
    for (const Domain& d : enumerate_domains(g, 3)) {
      int mu = maslov(d);
      REQUIRE(mu >= 0);
      REQUIRE(mu <= 3);
      CHECK(decomposes_into_rectangles(g, d, mu));
    }
  }
}

TEST_CASE("relative maslov grading") {
  GridDiagram g = unknot2();
  auto perms = all_perms(2);
  auto m = relative_maslov(g);
  REQUIRE(m.size() == 2);
  std::map<std::string, int> gr;
  for (std::size_t i = 0; i < perms.size(); i++) gr[perm_str(perms[i])] = m[i];
  CHECK(gr[perm_str({0, 1})] == 0);
  CHECK(gr[perm_str({1, 0})] == 1);

  // well-definedness over every rectangle edge, n in {2,3}
  for (const GridDiagram& gg : {unknot2(), twist3()}) {
    auto ps = all_perms(gg.n);
    auto mm = relative_maslov(gg);
    std::map<std::string, int> mg;
    for (std::size_t i = 0; i < ps.size(); i++) mg[perm_str(ps[i])] = mm[i];
    for (const Perm& x : ps)
      for (const Rect& r : rectangles_from(gg, x))
        CHECK(mg[perm_str(r.dom.from)] - mg[perm_str(r.dom.to)] ==
              maslov(r.dom) - 2 * o_count(gg, r.dom));
  }
}

TEST_CASE("annuli") {
  GridDiagram g = unknot2();
  Perm id{0, 1};
  Domain v = annulus_v(g, 0, id);
  Domain h = annulus_h(g, 0, id);
  CHECK(annulus_info(g, v).kind == AnnulusKind::Vertical);
  CHECK(annulus_info(g, v).j == 0);
  CHECK(annulus_info(g, h).kind == AnnulusKind::Horizontal);
  CHECK(maslov(v) == 2);
  CHECK(maslov(h) == 2);
  CHECK(v.from == id);
  CHECK(v.to == id);
  CHECK(o_count(g, v) == 1);
  CHECK(x_count(g, h) == 1);
  CHECK(annulus_info(g, rectangles_from(g, id)[0].dom).kind ==
        AnnulusKind::NotAnnulus);
}
