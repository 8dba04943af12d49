#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relgroup/error.hpp"
#include "relgroup/graph_op.hpp"

using namespace relgroup;

namespace {

Relation random_relation(std::size_t n, std::mt19937_64& rng) {
  return Relation::from_predicate(n, [&](std::size_t, std::size_t) { return rng() % 2 == 1; });
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(GraphOpSpec(2, 0, 1, {{0, 1, 0}}, 1));
  CHECK_THROWS_AS(GraphOpSpec(2, 0, 1, {{0, 1, 1}}, 1), InvariantError);
  CHECK_THROWS_AS(GraphOpSpec(2, 0, 2, {}, 0), InvariantError);
  CHECK_THROWS_AS(GraphOpSpec(2, 0, 1, {{0, 3, 0}}, 1), InvariantError);
  CHECK(graphs::by_name("Q") == graphs::quintary_q());
  CHECK_THROWS_AS(graphs::by_name("square"), PreconditionError);
}

TEST_CASE("the named graphs reproduce the basic operations") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t const n = 1 + t % 4;
    Relation const a = random_relation(n, rng);
    Relation const b = random_relation(n, rng);
    std::vector<Relation> const two{a, b};
    std::vector<Relation> const one{a};
    CHECK(graph_op_eval(graphs::intersection(), two) == intersect(a, b));
    CHECK(graph_op_eval(graphs::composition(), two) == compose(a, b));
    CHECK(graph_op_eval(graphs::converse(), one) == converse(a));
    CHECK(graph_op_eval(graphs::diagonal(), {}, n) == diagonal(n));
    CHECK(graph_op_eval(graphs::total(), {}, n) == total(n));
  }
}

TEST_CASE("Q matches its defining formula") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t const n = 1 + t % 5;
    std::vector<Relation> args;
    for (int k = 0; k < 5; ++k) args.push_back(random_relation(n, rng));
    auto m = [&](int k) { return oracle::matrix(args[k]); };
    CHECK(graph_op_eval(graphs::quintary_q(), args) ==
          oracle::relation(oracle::quintary_q(m(0), m(1), m(2), m(3), m(4))));
  }
}

TEST_CASE("Q with the diagonal in the last slot collapses") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t const n = 1 + t % 4;
    std::vector<Relation> args;
    for (int k = 0; k < 4; ++k) args.push_back(random_relation(n, rng));
    args.push_back(diagonal(n));
    CHECK(graph_op_eval(graphs::quintary_q(), args) ==
          compose(intersect(args[0], args[2]), intersect(args[1], args[3])));
  }
  std::vector<Relation> const ones(5, total(3));
  CHECK(graph_op_eval(graphs::quintary_q(), ones) == total(3));
}

TEST_CASE("a graph whose source is its sink") {
  // One loop edge at the single vertex: (i, i) when (i, i) is in the argument.
  GraphOpSpec const loop(1, 0, 0, {{0, 0, 0}}, 1);
  Relation const r(3, {{0, 0}, {0, 1}, {2, 2}});
  std::vector<Relation> const args{r};
  CHECK(graph_op_eval(loop, args) == Relation(3, {{0, 0}, {2, 2}}));
}

TEST_CASE("argument errors") {
  std::vector<Relation> const one{total(2)};
  std::vector<Relation> const mixed{total(2), total(3)};
  CHECK_THROWS_AS(graph_op_eval(graphs::composition(), one), DimensionError);
  CHECK_THROWS_AS(graph_op_eval(graphs::composition(), mixed), DimensionError);
  CHECK_THROWS_AS(graph_op_eval(graphs::total(), {}), PreconditionError);
}
