#include <doctest.h>

#include <random>

#include "clifford.hpp"
#include "obstruction.hpp"

using namespace gridsq::pin;

namespace {

Clifford random_elt(std::mt19937_64& rng) {
  Clifford c = Clifford::scalar(std::int64_t(rng() % 5) - 2);
  for (int t = 0; t < 3; t++) {
    Clifford blade = Clifford::scalar(std::int64_t(rng() % 5) - 2);
    for (int i = 1; i <= 5; i++)
      if (rng() & 1) blade = blade * Clifford::e(i);
    c = c + blade;
  }
  return c;
}

}  // namespace

TEST_CASE("algebra relations") {
  for (int i = 1; i <= 6; i++) {
    CHECK((Clifford::e(i) * Clifford::e(i)).scalar_part() == -1);
    for (int j = 1; j <= 6; j++) {
      if (i == j) continue;
      Clifford anti = Clifford::e(i) * Clifford::e(j) +
                      Clifford::e(j) * Clifford::e(i);
      CHECK(anti.is_scalar());
      CHECK(anti.scalar_part() == 0);
    }
  }
  CHECK(Clifford::e(-3).str() == (Clifford::scalar(0) - Clifford::e(3)).str());
}

TEST_CASE("associativity and distributivity on random elements") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; t++) {
    Clifford a = random_elt(rng), b = random_elt(rng), c = random_elt(rng);
    CHECK(((a * b) * c).str() == (a * (b * c)).str());
    CHECK((a * (b + c)).str() == (a * b + a * c).str());
  }
}

TEST_CASE("full rotation is the nontrivial class") {
  // the 2*pi rotation in a plane: fourth power of a quarter-turn lift
  std::vector<Clifford> loop(4, short_lift(1, 2));
  CHECK(eval_loop(loop) == 1);
  Clifford p = Clifford::scalar(1);
  for (const Clifford& c : loop) p = p * c;
  CHECK(p.scalar_part() == -4);
}

TEST_CASE("commuting-plane square is nullhomotopic") {
  // quarter turns in orthogonal planes of a 4-space, out and back
  CHECK(eval_loop({short_lift(3, 4), short_lift(1, 2), short_lift(4, 3),
                   short_lift(2, 1)}) == 0);
}

TEST_CASE("quadrilateral with two long edges") {
  // x = 1: two long edges present, class is x = 1 (product -2)
  std::vector<Clifford> x1 = {short_lift(2, 1), long_lift(3, 2, 0),
                              short_lift(1, 2), long_lift(1, 3, 0)};
  CHECK(eval_loop(x1) == 1);
  Clifford p = Clifford::scalar(1);
  for (const Clifford& c : x1) p = p * c;
  CHECK(p.scalar_part() == -2);
  // x = 0: the short edges cancel
  CHECK(eval_loop({short_lift(1, 2), short_lift(2, 1)}) == 0);
}

TEST_CASE("long-edge bigon class is x*y") {
  for (int x = 0; x <= 1; x++)
    for (int y = 0; y <= 1; y++) {
      std::vector<Clifford> loop;
      if (x) loop.push_back(long_lift(2, 1, 0));
      if (y) loop.push_back(long_lift(3, 1, 0));
      if (x) loop.push_back(long_lift(1, 2, 0));
      if (y) loop.push_back(long_lift(1, 3, 0));
      int cls = loop.empty() ? 0 : eval_loop(loop);
      CHECK(cls == (x & y));
    }
}

TEST_CASE("long lift orientation flips the class") {
  CHECK(eval_loop({long_lift(2, 1, 0), long_lift(1, 2, 0)}) == 1);
  CHECK(eval_loop({long_lift(2, 1, 0), long_lift(1, 2, 1)}) == 0);
}

TEST_CASE("E factor is its five-short expansion") {
  Clifford lhs = E(2, 1, 3);
  Clifford rhs = short_lift(1, 2) * short_lift(3, 2) * short_lift(1, 3) *
                 short_lift(2, 1) * short_lift(3, 2);
  CHECK((lhs - rhs).str() == "0");
}

TEST_CASE("local-model central loops") {
  CHECK(eval_loop(gridsq::loop_31a()) == 1);
  CHECK(eval_loop(gridsq::loop_31b()) == 1);
  CHECK(eval_loop(gridsq::loop_30c()) == 1);
}

TEST_CASE("eval_loop rejects non-loops") {
  CHECK_THROWS_AS(eval_loop({short_lift(1, 2)}), PinError);
  CHECK_THROWS_AS(Clifford::e(0), PinError);
  CHECK_THROWS_AS(short_lift(2, 2), PinError);
  CHECK_THROWS_AS(E(1, 1, 2), PinError);
}
