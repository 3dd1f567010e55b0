#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ulis/enumerate.hpp"
#include "ulis/tree_count.hpp"

using namespace ulis;

namespace {
const Permutation q123({1, 2, 3});
const Permutation q132({1, 3, 2});
const Permutation q231({2, 3, 1});
const Permutation q321({3, 2, 1});
}  // namespace

TEST_CASE("avoider stream equals the naive filter, in the same order") {
  const std::vector<Permutation> patterns{q123, q132, q231, q321, Permutation({2, 1, 3}),
                                          Permutation({3, 1, 2})};
  for (const Permutation& q : patterns) {
    for (int n = 0; n <= 7; ++n) {
      const std::vector<Permutation> expected = oracle::avoiders_by_filter(q, n);
      std::vector<Permutation> emitted;
      for_each_avoider(q, n, [&](const Permutation& p) { emitted.push_back(p); });
      REQUIRE(emitted == expected);
    }
  }
}

TEST_CASE("stream cardinality is Catalan for every length-3 pattern") {
  for (const Permutation& q : {q123, q132, q231, q321}) {
    for (int n = 0; n <= 11; ++n) {
      REQUIRE(count_avoiders(q, n) == catalan(n));
    }
  }
}

TEST_CASE("avoider stream examples") {
  Integer emitted = 0;
  for_each_avoider(q321, 3, [&](const Permutation&) { ++emitted; });
  CHECK(emitted == 5);

  std::vector<Permutation> zero;
  for_each_avoider(q231, 0, [&](const Permutation& p) { zero.push_back(p); });
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().empty());

  Integer c10 = 0;
  for_each_avoider(q132, 10, [&](const Permutation&) { ++c10; });
  CHECK(c10 == 16796);
}

TEST_CASE("ceiling guard refuses oversized streams with guidance") {
  CHECK_THROWS_WITH(for_each_avoider(q231, 15, [](const Permutation&) {}),
                    Catch::Matchers::ContainsSubstring("ceiling"));
  CHECK_THROWS_AS(count_ulis_avoiders(q231, 11, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(for_each_avoider(Permutation({2, 1}), 3, [](const Permutation&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(for_each_avoider(q231, -1, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("ulis avoider counts reproduce the published prefixes") {
  const std::vector<Integer> u231{1, 1, 1, 2, 5, 13, 35, 97, 275, 794};
  for (int n = 0; n <= 9; ++n) REQUIRE(count_ulis_avoiders(q231, n) == u231[static_cast<std::size_t>(n)]);

  const std::vector<Integer> u132{1, 1, 3, 8, 23, 71, 229, 759, 2566};
  for (int n = 1; n <= 9; ++n) REQUIRE(count_ulis_avoiders(q132, n) == u132[static_cast<std::size_t>(n - 1)]);

  CHECK(count_ulis_avoiders(q123, 5) == 4);
  CHECK(count_ulis_avoiders(q321, 3) == 3);
}

TEST_CASE("u_n(123) collapses to n-1") {
  CHECK(count_ulis_avoiders(q123, 1) == 1);
  for (int n = 2; n <= 10; ++n) REQUIRE(count_ulis_avoiders(q123, n) == n - 1);
}

TEST_CASE("involution counts") {
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(count_ulis_involutions(q231, n) == 1);
    REQUIRE(count_ulis_involutions(q321, n) == 1);
  }
  CHECK(count_ulis_involutions(q123, 1) == 1);
  CHECK(count_ulis_involutions(q123, 4) == 1);
  CHECK(count_ulis_involutions(q123, 5) == 0);
  for (int n = 2; n <= 10; ++n) {
    REQUIRE(count_ulis_involutions(q123, n) == (n % 2 == 0 ? 1 : 0));
  }
  CHECK(count_ulis_involutions(q132, 4) == 2);

  CHECK(count_involution_avoiders(q132, 6) == 20);
  CHECK(count_involution_avoiders(q132, 1) == 1);
  CHECK(count_involution_avoiders(q321, 4) == 6);
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(count_involution_avoiders(q132, n) == binomial(n, n / 2));
  }
}

TEST_CASE("the two 132-avoiding ulis involutions of length 4") {
  std::vector<Permutation> witnesses;
  for_each_avoider(q132, 4, [&](const Permutation& p) {
    if (is_involution(p) && has_ulis(p)) witnesses.push_back(p);
  });
  REQUIRE(witnesses.size() == 2);
  CHECK(witnesses[0].values() == std::vector<int>{1, 2, 3, 4});
  CHECK(witnesses[1].values() == std::vector<int>{4, 2, 3, 1});
}

TEST_CASE("bidirectional ballot counts") {
  CHECK(count_bidirectional_ballot(2) == 1);
  CHECK(count_bidirectional_ballot(5) == 2);
  for (int n = 1; n <= 16; ++n) {
    REQUIRE(count_bidirectional_ballot(n) == count_bidirectional_ballot_pruned(n));
  }
  CHECK_THROWS_AS(count_bidirectional_ballot(0), std::invalid_argument);
  CHECK_THROWS_AS(count_bidirectional_ballot(25), std::invalid_argument);
  CHECK_THROWS_AS(count_bidirectional_ballot_pruned(29), std::invalid_argument);
}

TEST_CASE("i_n(132) equals the next bidirectional ballot count") {
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(count_ulis_involutions(q132, n) == count_bidirectional_ballot(n + 1));
  }
}

TEST_CASE("superadditivity for the sum indecomposable patterns") {
  for (const Permutation& q : {q231, q321}) {
    std::vector<Integer> u;
    for (int n = 0; n <= 9; ++n) u.push_back(count_ulis_avoiders(q, n));
    for (int m = 1; m <= 8; ++m) {
      for (int n = 1; m + n <= 9; ++n) {
        REQUIRE(u[static_cast<std::size_t>(m)] * u[static_cast<std::size_t>(n)] <=
                u[static_cast<std::size_t>(m + n)]);
      }
    }
  }
}

TEST_CASE("counts are identical for any worker count") {
  for (int threads : {1, 2, 3, 8}) {
    CHECK(count_ulis_avoiders(q321, 9, threads) == count_ulis_avoiders(q321, 9, 1));
    CHECK(count_ulis_involutions(q132, 9, threads) == count_ulis_involutions(q132, 9, 1));
    CHECK(count_avoiders(q123, 9, threads) == catalan(9));
  }
}
