#include <doctest.h>

#include "confblocks/schur.hpp"
#include "support.hpp"

using namespace confblocks;
using testing::parse_all;

TEST_CASE("lr_coefficient examples") {
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2}, {2}, {2, 2}) == 1);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 2}) == 1);
  CHECK(lr_coefficient({2}, {1}, {2}) == 0);
  CHECK(lr_coefficient({2}, {1}, {1, 1, 1}) == 0);
  CHECK(lr_coefficient({}, {}, {}) == 1);
  CHECK(lr_coefficient({}, {3, 1}, {3, 1}) == 1);
}

TEST_CASE("lr_coefficient against skew tableau enumeration") {
  for (int n = 0; n <= 7; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (const auto& lam : testing::partitions_of(a, 7)) {
        for (const auto& mu : testing::partitions_of(n - a, 7)) {
          for (const auto& nu : testing::partitions_of(n, 7)) {
            const auto expected = testing::brute_force_lr(lam, mu, nu);
            CHECK(lr_coefficient(lam, mu, nu) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("lr_coefficient symmetries") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Partition lam = testing::random_partition(rng, 3, 4);
    const Partition mu = testing::random_partition(rng, 3, 4);
    for (const auto& [nu, c] : lr_expand(lam, mu, 6)) {
      CHECK(lr_coefficient(mu, lam, nu) == c);
      CHECK(lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate()) == c);
    }
  }
}

TEST_CASE("lr_expand preserves gl dimensions") {
  testing::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const int rows = testing::uniform(rng, 1, 4);
    const Partition lam = testing::random_partition(rng, rows, 4);
    const Partition mu = testing::random_partition(rng, rows, 4);
    BigInt total = 0;
    for (const auto& [nu, c] : lr_expand(lam, mu, rows)) total += c * gl_dimension(nu, rows);
    CHECK(total == gl_dimension(lam, rows) * gl_dimension(mu, rows));
  }
}

TEST_CASE("gl_dimension") {
  CHECK(gl_dimension({1}, 3) == 3);
  CHECK(gl_dimension({1, 1}, 3) == 3);
  CHECK(gl_dimension({2, 1}, 3) == 8);
  CHECK(gl_dimension({1, 1, 1, 1}, 3) == 0);
  CHECK(gl_dimension({}, 5) == 1);
}

TEST_CASE("schur_product_bounded") {
  auto a = SchurExpansion::single({2}, 2);
  auto b = SchurExpansion::single({1, 1}, 2);
  auto p = schur_product_bounded(a, b);
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient({3, 1}) == 1);

  CHECK(schur_product_bounded(a, SchurExpansion::unit(2)) == a);

  auto one = SchurExpansion::single({1}, 3);
  auto sq = schur_product_bounded(one, one);
  CHECK(sq.terms().size() == 2);
  CHECK(sq.coefficient({2}) == 1);
  CHECK(sq.coefficient({1, 1}) == 1);

  CHECK_THROWS_AS(schur_product_bounded(one, a), DomainError);

  SchurExpansion e(2);
  e.add({1, 1, 1}, 5);
  CHECK(e.empty());
  e.add({2}, 3);
  e.add({2}, -3);
  CHECK(e.empty());
}

TEST_CASE("coinvariant_rank examples") {
  CHECK(coinvariant_rank(2, parse_all({"w1", "w1", "w1", "w1", "w1", "w1"}, 2)) == 5);
  CHECK(coinvariant_rank(1, parse_all({"w1", "w1"}, 1)) == 1);
  CHECK(coinvariant_rank(2, parse_all({"w1", "w1"}, 2)) == 0);
  CHECK(coinvariant_rank(2, parse_all({"2w1+w2", "w2", "2w1", "2w2", "w1+w2"}, 2)) == 9);
  CHECK(coinvariant_rank(2, parse_all({"2w1+w2", "w2", "2w1", "2w2", "3w2"}, 2)) == 7);
  CHECK(coinvariant_rank(2, parse_all({"2w1", "2w1", "2w1", "2w1", "2w1", "2w1", "w2", "2w2"}, 2)) == 150);
  CHECK(coinvariant_rank(3, parse_all({"w1+w3", "2w1+2w2", "2w1+2w2", "4w1"}, 3)) == 4);
  CHECK(coinvariant_rank(2, std::vector<SlWeight>{}) == 1);
  CHECK(coinvariant_rank(2, parse_all({"0"}, 2)) == 1);
  CHECK(coinvariant_rank(2, parse_all({"w1"}, 2)) == 0);
  CHECK_THROWS_AS(coinvariant_rank(2, parse_all({"w1", "w1"}, 1)), DomainError);
}

TEST_CASE("invariant_oracle examples") {
  CHECK(invariant_oracle(2, parse_all({"w1", "w1", "w1"}, 2)) == 1);
  CHECK(invariant_oracle(1, parse_all({"w1", "w1", "w1", "w1"}, 1)) == 2);
  CHECK(invariant_oracle(2, parse_all({"w1", "w2"}, 2)) == 1);
  CHECK(invariant_oracle(2, parse_all({"w1", "w1", "w1", "w1", "w1", "w1"}, 2)) == 5);
  CHECK_THROWS_AS(invariant_oracle(2, parse_all({"w1", "w1", "w1", "w1", "w1", "w1"}, 2), 100), CapacityError);
}

TEST_CASE("coinvariant_rank agrees with the oracle on small inputs") {
  testing::Rng rng(13);
  int compared = 0;
  while (compared < 60) {
    const int r = testing::uniform(rng, 1, 3);
    const int n = testing::uniform(rng, 2, 4);
    const auto ws = testing::random_weights(rng, r, 3, n);
    BigInt oracle;
    try {
      oracle = invariant_oracle(r, ws, 200'000);
    } catch (const CapacityError&) {
      continue;
    }
    CHECK(coinvariant_rank(r, ws) == oracle);
    ++compared;
  }
}
