#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relgroup/error.hpp"
#include "relgroup/relation.hpp"

using namespace relgroup;

namespace {

Relation random_relation(std::size_t n, std::mt19937_64& rng, bool reflexive) {
  return Relation::from_predicate(
      n, [&](std::size_t i, std::size_t j) { return (reflexive && i == j) || rng() % 2 == 1; });
}

// All 2^(n*n) relations on n elements.
std::vector<Relation> every_relation(std::size_t n) {
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask)
    out.push_back(Relation::from_predicate(
        n, [&](std::size_t i, std::size_t j) { return ((mask >> (i * n + j)) & 1) != 0; }));
  return out;
}

}  // namespace

TEST_CASE("construction and queries") {
  Relation const r(3, {{0, 1}, {2, 2}});
  CHECK(r.size() == 3);
  CHECK(r(0, 1));
  CHECK_FALSE(r(1, 0));
  CHECK(r.count() == 2);
  CHECK(r.pairs() == std::vector<Relation::Pair>{{0, 1}, {2, 2}});
  CHECK_FALSE(r.is_reflexive());
  CHECK_THROWS_AS(Relation(0), PreconditionError);
  CHECK_THROWS_AS(Relation(2, {{0, 2}}), InvariantError);
}

TEST_CASE("compose matches the triple loop, including across word boundaries") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 63u, 64u, 65u, 130u}) {
    for (int t = 0; t < 3; ++t) {
      Relation const a = random_relation(n, rng, false);
      Relation const b = random_relation(n, rng, false);
      CHECK(compose(a, b) == oracle::relation(oracle::compose(oracle::matrix(a), oracle::matrix(b))));
      CHECK(converse(a) == oracle::relation(oracle::converse(oracle::matrix(a))));
    }
  }
}

TEST_CASE("compose examples") {
  std::mt19937_64 rng(1);
  Relation const rho = random_relation(3, rng, false);
  CHECK(compose(diagonal(3), rho) == rho);

  Relation const expected = Relation::from_predicate(3, [](std::size_t i, std::size_t j) {
    return !((i == 0 && j == 2) || (i == 2 && j == 0));
  });
  CHECK(compose(fence(3), converse(fence(3))) == expected);

  CHECK(compose(compose(three_order(5), three_order(3)), three_order(1)) == total(6));
  CHECK_THROWS_AS(compose(total(2), total(3)), DimensionError);
}

TEST_CASE("converse examples") {
  CHECK(converse(diagonal(4)) == diagonal(4));
  CHECK(converse(fence(3)) == Relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {2, 1}}));
  std::mt19937_64 rng(2);
  Relation const r = random_relation(5, rng, false);
  CHECK(converse(converse(r)) == r);
}

TEST_CASE("boolean operations") {
  std::mt19937_64 rng(3);
  Relation const rho = random_relation(4, rng, false);
  CHECK(boolean_op(SetOp::intersect, rho, total(4)) == rho);
  CHECK(boolean_op(SetOp::unite, rho, empty(4)) == rho);
  CHECK(boolean_op(SetOp::complement, boolean_op(SetOp::complement, rho)) == rho);
  CHECK(intersect(rho, complement(rho)) == empty(4));

  // Both chain orders agree exactly on the middle three elements.
  CHECK(intersect(three_order(1), three_order(3)) ==
        unite(diagonal(6), Relation(6, {{2, 3}, {2, 4}, {3, 4}})));

  CHECK_THROWS_AS(boolean_op(SetOp::intersect, rho), PreconditionError);
  CHECK_THROWS_AS(boolean_op(SetOp::unite, rho, total(3)), DimensionError);
}

TEST_CASE("constants") {
  CHECK(constant(Constant::diagonal, 2) == Relation(2, {{0, 0}, {1, 1}}));
  CHECK(constant(Constant::total, 2).count() == 4);
  CHECK(constant(Constant::empty, 2).count() == 0);
  CHECK(compose(total(3), total(3)) == total(3));
  CHECK_THROWS_AS(constant(Constant::total, 0), PreconditionError);
}

TEST_CASE("classify") {
  CHECK(classify(diagonal(5)) == RelationClass::equivalence);
  CHECK(classify(fence(4)) == RelationClass::preorder);
  CHECK(classify(Relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}})) ==
        RelationClass::reflexive_only);
  CHECK(classify(Relation(2, {{0, 1}})) == RelationClass::not_reflexive);
  CHECK(classify(total(3)) == RelationClass::equivalence);
  for (std::size_t n = 2; n <= 7; ++n) {
    CHECK(classify(fence(n)) == RelationClass::preorder);
    RelationClass const expected =
        n > 2 ? RelationClass::reflexive_only : RelationClass::equivalence;
    CHECK(classify(compose(fence(n), converse(fence(n)))) == expected);
  }
  CHECK(to_string(RelationClass::preorder) == "preorder");
}

TEST_CASE("classify agrees with the definitions on every relation with n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& r : every_relation(n)) {
      auto const m = oracle::matrix(r);
      bool reflexive = true, transitive = true, symmetric = true;
      for (std::size_t i = 0; i < n; ++i) {
        reflexive = reflexive && m[i][i];
        for (std::size_t j = 0; j < n; ++j) {
          symmetric = symmetric && m[i][j] == m[j][i];
          for (std::size_t k = 0; k < n; ++k)
            transitive = transitive && (!m[i][j] || !m[j][k] || m[i][k]);
        }
      }
      RelationClass const expected = !reflexive   ? RelationClass::not_reflexive
                                     : !transitive ? RelationClass::reflexive_only
                                     : symmetric   ? RelationClass::equivalence
                                                   : RelationClass::preorder;
      CHECK(classify(r) == expected);
    }
  }
}

TEST_CASE("alternating chains") {
  Relation const f3 = fence(3);
  CHECK(alternating_chain(f3, 1, ChainStart::forward) == f3);
  CHECK(alternating_chain(f3, 1, ChainStart::converse) == converse(f3));
  CHECK(alternating_chain(f3, 2, ChainStart::forward) ==
        Relation::from_predicate(3, [](std::size_t i, std::size_t j) { return i + j != 2 || i == 1; }));
  CHECK(alternating_chain(f3, 3, ChainStart::forward) == total(3));
  CHECK(alternating_chain(f3, 2, ChainStart::converse) == total(3));
  CHECK_THROWS_AS(alternating_chain(Relation(2, {{0, 1}}), 2, ChainStart::forward),
                  PreconditionError);
  CHECK_THROWS_AS(alternating_chain(f3, 0, ChainStart::forward), PreconditionError);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    Relation const r = random_relation(1 + t % 5, rng, true);
    for (std::size_t m = 1; m <= 6; ++m) {
      for (auto start : {ChainStart::forward, ChainStart::converse}) {
        Relation const c = alternating_chain(r, m, start);
        CHECK(c == oracle::relation(oracle::chain(oracle::matrix(r), m, start == ChainStart::converse)));
        CHECK(c.subset_of(alternating_chain(r, m + 1, start)));
      }
    }
  }
}

TEST_CASE("min_length_to_total examples") {
  for (std::size_t n = 3; n <= 8; ++n) CHECK(min_length_to_total(fence(n), ChainStart::forward) == n);
  CHECK(min_length_to_total(fence(5), ChainStart::converse) == 4u);
  CHECK_FALSE(min_length_to_total(Relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}),
                                  ChainStart::forward).has_value());
  CHECK(min_length_to_total(total(4), ChainStart::forward) == 1u);
  CHECK(min_length_to_total(diagonal(1), ChainStart::converse) == 1u);
}

TEST_CASE("two equal consecutive chain values do not mean the chain has stopped") {
  // Here the 3- and 4-factor composites coincide, yet the 5-factor one is
  // total.
  Relation const rho(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 3}, {1, 0}, {1, 2}});
  Relation const c3 = alternating_chain(rho, 3, ChainStart::forward);
  CHECK(c3 == alternating_chain(rho, 4, ChainStart::forward));
  CHECK(c3.count() == 14);
  CHECK(alternating_chain(rho, 5, ChainStart::forward) == total(4));
  CHECK(min_length_to_total(rho, ChainStart::forward) == 5u);
}

TEST_CASE("min_length_to_total agrees with the unbounded oracle") {
  auto check = [](Relation const& r) {
    for (auto start : {ChainStart::forward, ChainStart::converse}) {
      auto const expected =
          oracle::min_length_to_total(oracle::matrix(r), start == ChainStart::converse);
      CHECK(min_length_to_total(r, start) == expected);
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t const bits = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::size_t bit = 0;
      check(Relation::from_predicate(n, [&](std::size_t i, std::size_t j) {
        return i == j || ((mask >> bit++) & 1);
      }));
    }
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t const n = 5 + t % 3;
    // Sparse relations give long chains.
    check(Relation::from_predicate(n, [&](std::size_t i, std::size_t j) {
      return i == j || rng() % 5 == 0;
    }));
  }
}

TEST_CASE("residuals") {
  std::mt19937_64 rng(6);
  Relation const rho = random_relation(4, rng, false);
  CHECK(residuals(rho, diagonal(4)).over == rho);
  CHECK(residuals(rho, diagonal(4)).under == rho);
  CHECK(residuals(total(4), rho).over == total(4));
  CHECK_THROWS_AS(residuals(rho, total(3)), DimensionError);

  for (int t = 0; t < 100; ++t) {
    std::size_t const n = 1 + t % 6;
    Relation const a = random_relation(n, rng, false);
    Relation const b = random_relation(n, rng, false);
    auto const [over, under] = residuals(a, b);
    CHECK(over == oracle::relation(oracle::left_residual(oracle::matrix(a), oracle::matrix(b))));
    CHECK(under == oracle::relation(oracle::right_residual(oracle::matrix(a), oracle::matrix(b))));
  }
}

TEST_CASE("residual adjunction, exhaustive at n = 2") {
  auto const all = every_relation(2);
  for (auto const& rho : all)
    for (auto const& sigma : all) {
      auto const [over, under] = residuals(rho, sigma);
      for (auto const& tau : all) {
        CHECK(compose(tau, sigma).subset_of(rho) == tau.subset_of(over));
        CHECK(compose(sigma, tau).subset_of(rho) == tau.subset_of(under));
      }
    }
}

TEST_CASE("residual adjunction, sampled at n = 3") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 3000; ++t) {
    Relation const rho = random_relation(3, rng, false);
    Relation const sigma = random_relation(3, rng, false);
    Relation const tau = random_relation(3, rng, false);
    auto const [over, under] = residuals(rho, sigma);
    CHECK(compose(tau, sigma).subset_of(rho) == tau.subset_of(over));
    CHECK(compose(sigma, tau).subset_of(rho) == tau.subset_of(under));
  }
}

TEST_CASE("residuals of reflexive relations need not be reflexive") {
  Relation const rho = diagonal(2);
  Relation const sigma = total(2);
  CHECK(rho.is_reflexive());
  CHECK(sigma.is_reflexive());
  CHECK_FALSE(residuals(rho, sigma).over.is_reflexive());
  CHECK_FALSE(residuals(rho, sigma).under.is_reflexive());
  // With sigma inside rho the diagonal survives.
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Relation const s = random_relation(4, rng, true);
    Relation const r = unite(s, random_relation(4, rng, true));
    CHECK(residuals(r, s).over.is_reflexive());
    CHECK(residuals(r, s).under.is_reflexive());
  }
}

TEST_CASE("algebraic laws on random relations") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    std::size_t const n = 1 + t % 5;
    Relation const a = random_relation(n, rng, false);
    Relation const b = random_relation(n, rng, false);
    Relation const c = random_relation(n, rng, false);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(converse(compose(a, b)) == compose(converse(b), converse(a)));
    Relation const ra = unite(a, diagonal(n)), rb = unite(b, diagonal(n));
    CHECK(ra.subset_of(compose(ra, rb)));
    CHECK(rb.subset_of(compose(ra, rb)));
  }
}

TEST_CASE("named relations") {
  CHECK(fence(3) == Relation(3, {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {1, 2}}));
  CHECK(fence(2) == Relation(2, {{0, 0}, {1, 1}, {1, 0}}));
  CHECK(crown(3) == Relation(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 3}, {2, 1}, {2, 3}}));
  CHECK(crown(5).size() == 8);
  Relation const k1 = three_order(1);
  CHECK(k1 == Relation::from_predicate(6, [](std::size_t i, std::size_t j) {
          return i == j || (i < j && j <= 4);
        }));
  CHECK(classify(k1) == RelationClass::preorder);
  CHECK(named_relation("fence", 4) == fence(4));
  CHECK(named_relation("crown", 4) == crown(4));
  CHECK(named_relation("k135", 3) == three_order(3));
  CHECK_THROWS_AS(fence(1), PreconditionError);
  CHECK_THROWS_AS(crown(2), PreconditionError);
  CHECK_THROWS_AS(three_order(2), PreconditionError);
  CHECK_THROWS_AS(named_relation("zigzag", 3), PreconditionError);
}

TEST_CASE("crowns are partial orders whose chains need n factors from either side") {
  for (std::size_t n = 3; n <= 8; ++n) {
    Relation const c = crown(n);
    CHECK(classify(c) == RelationClass::preorder);
    CHECK(min_length_to_total(c, ChainStart::forward) == n);
    CHECK(min_length_to_total(c, ChainStart::converse) == n);
  }
}
