#include <doctest.h>

#include <set>

#include "cdp.hpp"

using namespace gridsq;

namespace {

GridDiagram unknot2() { return GridDiagram::parse(R"({"n":2,"X":[1,0],"O":[0,1]})"); }
GridDiagram twist3() { return GridDiagram::parse(R"({"n":3,"X":[1,2,0],"O":[0,1,2]})"); }

}  // namespace

TEST_CASE("partition moves") {
  PartitionMoves m = partition_moves({2, 1});
  CHECK(m.ue == std::vector<Partition>{{1, 2, 1}, {2, 1, 1}, {2, 1, 1}});
  CHECK(m.ec == std::vector<Partition>{{3}});
  CHECK(m.ir == std::vector<Partition>{{1}});
  CHECK(m.fr == std::vector<Partition>{{2}});
  PartitionMoves e = partition_moves({});
  CHECK(e.ue == std::vector<Partition>{{1}});
  CHECK(e.ec.empty());
  CHECK(e.ir.empty());
  CHECK(e.fr.empty());
}

TEST_CASE("gen bookkeeping and validation") {
  GridDiagram g = unknot2();
  Perm id{0, 1};
  CDPGen c = make_gen(constant_domain(2, id));
  CHECK(grading(c) == 0);
  CHECK(omega(c) == 0);
  c.N = {2, 0};
  c.lam = {{1, 1}, {}};
  CHECK_NOTHROW(check_gen(c));
  CHECK(grading(c) == 2);
  CHECK(omega(c) == 2);
  c.lam = {{2}, {}};
  CHECK(grading(c) == 1);
  c.lam = {{1}, {}};
  CHECK_THROWS_AS(check_gen(c), GridError);  // lambda does not partition N
}

TEST_CASE("taxonomy of hand-built generators") {
  GridDiagram g = unknot2();
  Perm id{0, 1};
  Domain cd = constant_domain(2, id);

  CDPGen bubble = make_gen(cd);
  bubble.N = {1, 0};
  bubble.lam = {{1}, {}};
  CHECK(classify(g, bubble) == Tax::T1_0);

  CDPGen rect = make_gen(rectangles_from(g, id)[0].dom);
  CHECK(classify(g, rect) == Tax::T1_1);

  CDPGen pair01 = make_gen(cd);  // unit bubbles at two markings
  pair01.N = {1, 1};
  pair01.lam = {{1}, {1}};
  CHECK(classify(g, pair01) == Tax::T2_0b);

  CDPGen two_j = make_gen(cd);  // (2)_j split as (1,1)
  two_j.N = {2, 0};
  two_j.lam = {{1, 1}, {}};
  CHECK(classify(g, two_j) == Tax::T2_0a);

  CDPGen vann = make_gen(annulus_v(g, 0, id));
  CHECK(classify(g, vann) == Tax::T2_2b);

  CDPGen r31a = rect;  // rectangle with (1,1)_j decoration
  r31a.N = {2, 0};
  r31a.lam = {{1, 1}, {}};
  CHECK(grading(r31a) == 3);
  CHECK(classify(g, r31a) == Tax::T3_1a);

  CDPGen r31b = rect;
  r31b.N = {1, 1};
  r31b.lam = {{1}, {1}};
  CHECK(classify(g, r31b) == Tax::T3_1b);

  CDPGen c30a = make_gen(cd);
  c30a.N = {3, 0};
  c30a.lam = {{1, 1, 1}, {}};
  CHECK(classify(g, c30a) == Tax::T3_0a);

  GridDiagram g3 = twist3();
  CDPGen c30c = make_gen(constant_domain(3, {0, 1, 2}));
  c30c.N = {1, 1, 1};
  c30c.lam = {{1}, {1}, {1}};
  CHECK(classify(g3, c30c) == Tax::T3_0c);
}

TEST_CASE("subcomplex: d^2 = 0, monotonicity, grading drop") {
  for (const GridDiagram& g : {unknot2(), twist3()}) {
    SubComplex sc = build_subcomplex(g);
    // basis/index consistency
    for (int k = 0; k <= 3; k++) {
      CHECK(sc.basis[k].size() == sc.index[k].size());
      for (std::size_t i = 0; i < sc.basis[k].size(); i++) {
        CHECK(grading(sc.basis[k][i]) == k);
        CHECK(omega(sc.basis[k][i]) <= 3);
        CHECK(sc.index[k].at(gen_key(sc.basis[k][i])) == i);
      }
    }
    // d^2 = 0 as matrices
    for (int k = 2; k <= 3; k++) {
      gf2::BitMatrix dd = gf2::mul(sc.bnd[k], sc.bnd[k - 1]);
      for (std::size_t i = 0; i < dd.rows; i++) CHECK_FALSE(dd[i].any());
    }
    // every differential term drops grading by 1 and never raises omega
    for (int k = 1; k <= 3; k++)
      for (const CDPGen& gen : sc.basis[k]) {
        CHECK(classify(g, gen) != Tax::Other);
        for (const CDPGen& t : differential(g, gen)) {
          CHECK(grading(t) == k - 1);
          CHECK(omega(t) <= omega(gen));
        }
      }
  }
}

TEST_CASE("unknot 2x2 frozen basis sizes") {
  SubComplex sc = build_subcomplex(unknot2());
  CHECK(sc.basis[0].size() == 2);   // the two generators, no decorations
  CHECK(sc.basis[1].size() == 16);  // 4 rectangles + 2 perms x 2 markings x
                                    // lam in {(1),(2),(3)}
  CHECK(sc.bnd[1].rows == sc.basis[1].size());
  CHECK(sc.bnd[1].cols == sc.basis[0].size());
}

TEST_CASE("differential is reduced mod 2 and sorted") {
  GridDiagram g = twist3();
  SubComplex sc = build_subcomplex(g);
  for (const CDPGen& gen : sc.basis[2]) {
    auto terms = differential(g, gen);
    std::set<std::string> keys;
    for (const CDPGen& t : terms) CHECK(keys.insert(gen_key(t)).second);
  }
}
