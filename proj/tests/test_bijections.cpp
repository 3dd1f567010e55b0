#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ulis/bijections.hpp"
#include "ulis/enumerate.hpp"
#include "ulis/lis.hpp"
#include "ulis/tree_count.hpp"

using namespace ulis;

namespace {
const Permutation q132({1, 3, 2});
const Permutation q321({3, 2, 1});
}  // namespace

TEST_CASE("dyck path validation") {
  CHECK(DyckPath::parse("UUDD").semilength() == 2);
  CHECK(DyckPath::parse("").length() == 0);
  CHECK_THROWS_WITH(DyckPath::parse("UDD"), Catch::Matchers::ContainsSubstring("dips below"));
  CHECK_THROWS_WITH(DyckPath::parse("UUD"), Catch::Matchers::ContainsSubstring("ends at height"));
  CHECK_THROWS_WITH(DyckPath::parse("UXD"), Catch::Matchers::ContainsSubstring("unexpected character"));
  CHECK(DyckPath::parse("UUDD").to_string() == "UUDD");
}

TEST_CASE("peaks and unique maxima") {
  CHECK(peaks(DyckPath::parse("UUDD")) == std::vector<Peak>{{2, 2}});
  CHECK(peaks(DyckPath::parse("UDUD")) == std::vector<Peak>{{1, 1}, {3, 1}});
  CHECK(unique_max_peak(DyckPath::parse("UUDD")) == 2);
  CHECK_FALSE(unique_max_peak(DyckPath::parse("UDUD")).has_value());
  CHECK_FALSE(unique_max_peak(DyckPath::parse("")).has_value());
}

TEST_CASE("path symmetry") {
  CHECK(is_symmetric(DyckPath::parse("UUDD")));
  CHECK_FALSE(is_symmetric(DyckPath::parse("UUDDUD")));
  CHECK(is_symmetric(DyckPath::parse("UDUUDDUD")));
}

TEST_CASE("plane tree serialization and statistics") {
  const PlaneTree single;
  CHECK(to_parentheses(single) == "()");
  CHECK(max_depth_leaf_count(single) == std::pair<int, int>{0, 1});

  PlaneTree two_leaves;
  two_leaves.children.resize(2);
  CHECK(to_parentheses(two_leaves) == "(()())");
  CHECK(max_depth_leaf_count(two_leaves) == std::pair<int, int>{1, 2});

  CHECK(tree_from_parentheses("(()())") == two_leaves);
  CHECK_THROWS_AS(tree_from_parentheses("(()"), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_parentheses("()()"), std::invalid_argument);

  for (int m = 0; m <= 6; ++m) {
    for_each_dyck_path(m, [&](const DyckPath& d) {
      const PlaneTree t = dyck_to_tree(d);
      REQUIRE(t.size() == m + 1);
      REQUIRE(tree_to_dyck(t) == d);
      REQUIRE(tree_from_parentheses(to_parentheses(t)) == t);
    });
  }
}

TEST_CASE("dyck_to_tree shapes") {
  CHECK(dyck_to_tree(DyckPath::parse("")) == PlaneTree{});
  CHECK(to_parentheses(dyck_to_tree(DyckPath::parse("UUDD"))) == "((()))");
  CHECK(to_parentheses(dyck_to_tree(DyckPath::parse("UDUD"))) == "(()())");
}

TEST_CASE("psi base cases") {
  CHECK(to_parentheses(to_plane_tree(Permutation{})) == "()");
  CHECK(to_parentheses(to_plane_tree(Permutation({2, 1}))) == "(()())");
  CHECK(to_parentheses(to_plane_tree(Permutation({1, 2}))) == "((()))");
  CHECK_THROWS_WITH(to_plane_tree(Permutation({2, 5, 3, 1, 4})),
                    Catch::Matchers::ContainsSubstring("contains 1,3,2"));
}

TEST_CASE("psi maps onto trees, sizes and leaf counts matching") {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> images;
    Integer total = 0;
    for_each_avoider(q132, n, [&](const Permutation& p) {
      const PlaneTree t = to_plane_tree(p);
      REQUIRE(t.size() == n + 1);
      const auto [height, leaves] = max_depth_leaf_count(t);
      const RankProfile prof = rank_profile(p);
      REQUIRE(Integer(leaves) == prof.lis_count);
      images.insert(to_parentheses(t));
      ++total;
    });
    REQUIRE(Integer(images.size()) == total);  // injective on each length
  }
}

TEST_CASE("phi base cases and inverse") {
  CHECK(to_dyck_path(Permutation({1})).to_string() == "UD");
  CHECK(to_dyck_path(Permutation({2, 1})).to_string() == "UDUD");
  CHECK(to_dyck_path(Permutation({1, 2})).to_string() == "UUDD");
  CHECK(to_dyck_path(Permutation{}).to_string() == "");
  CHECK_THROWS_AS(to_dyck_path(Permutation({1, 3, 2})), std::invalid_argument);

  for (int n = 0; n <= 8; ++n) {
    for_each_avoider(q132, n, [&](const Permutation& p) {
      const DyckPath d = to_dyck_path(p);
      REQUIRE(d.semilength() == n);
      REQUIRE(from_dyck_path(d) == p);
    });
  }
  // phi is onto: pulling back every path gives a 132-avoider that maps back
  for (int m = 0; m <= 6; ++m) {
    for_each_dyck_path(m, [&](const DyckPath& d) {
      const Permutation p = from_dyck_path(d);
      REQUIRE(avoids(p, q132));
      REQUIRE(to_dyck_path(p) == d);
    });
  }
}

TEST_CASE("unique maximum peaks track the unique longest subsequences") {
  for (int n = 1; n <= 8; ++n) {
    for_each_avoider(q132, n, [&](const Permutation& p) {
      const RankProfile prof = rank_profile(p);
      const auto peak = unique_max_peak(to_dyck_path(p));
      REQUIRE((prof.lis_count == 1) == peak.has_value());
      if (peak) REQUIRE(*peak == prof.lis_length);
    });
  }
}

TEST_CASE("symmetric paths are exactly the involutions") {
  for (int n = 1; n <= 8; ++n) {
    for_each_avoider(q132, n, [&](const Permutation& p) {
      REQUIRE(is_involution(p) == is_symmetric(to_dyck_path(p)));
    });
  }
}

TEST_CASE("claesson-kitaev worked example and edge cases") {
  const Permutation image = claesson_kitaev(Permutation({3, 5, 1, 2, 4, 7, 8, 6}));
  CHECK(image.values() == std::vector<int>{3, 5, 7, 1, 2, 4, 8, 9, 6});
  CHECK(claesson_kitaev_inverse(image).values() == std::vector<int>{3, 5, 1, 2, 4, 7, 8, 6});

  CHECK(claesson_kitaev(Permutation({1})).values() == std::vector<int>{2, 1});
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    std::vector<int> expect{n + 1};
    for (int v = 1; v <= n; ++v) expect.push_back(v);
    CHECK(claesson_kitaev(Permutation(identity)).values() == expect);
  }

  CHECK_THROWS_AS(claesson_kitaev(Permutation{}), std::invalid_argument);
  CHECK_THROWS_WITH(claesson_kitaev(Permutation({3, 2, 1})),
                    Catch::Matchers::ContainsSubstring("contains 3,2,1"));
  CHECK_THROWS_AS(claesson_kitaev_inverse(Permutation({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(claesson_kitaev_inverse(Permutation({2, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(claesson_kitaev_inverse(Permutation({1})), std::invalid_argument);
}

TEST_CASE("claesson-kitaev is a bijection onto indecomposable avoiders") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::vector<int>> images;
    for_each_avoider(q321, n, [&](const Permutation& p) {
      const Permutation fp = claesson_kitaev(p);
      REQUIRE(fp.size() == n + 1);
      REQUIRE(avoids(fp, q321));
      REQUIRE(is_sum_indecomposable(fp));
      REQUIRE(claesson_kitaev_inverse(fp) == p);
      images.insert(fp.values());
    });
    std::set<std::vector<int>> indecomposable;
    for_each_avoider(q321, n + 1, [&](const Permutation& r) {
      if (is_sum_indecomposable(r)) indecomposable.insert(r.values());
    });
    REQUIRE(images == indecomposable);
  }
}

TEST_CASE("claesson-kitaev on square shapes never raises a rank") {
  for (int m = 1; m <= 4; ++m) {
    Integer square_count = 0;
    for_each_avoider(q321, 2 * m, [&](const Permutation& p) {
      if (rs_shape(p) != std::vector<int>{m, m}) return;
      ++square_count;
      const Permutation fp = claesson_kitaev(p);
      const auto before = value_ranks(p);
      const auto after = value_ranks(fp);
      for (int v = 1; v <= 2 * m; ++v) {
        REQUIRE(after[static_cast<std::size_t>(v - 1)] <= before[static_cast<std::size_t>(v - 1)]);
      }
      const RankProfile prof = rank_profile(fp);
      REQUIRE(prof.lis_count == 1);
      REQUIRE(prof.lis_length == m + 1);
    });
    REQUIRE(square_count == catalan(m) * catalan(m));
  }
}

TEST_CASE("robinson-schensted basics") {
  const auto [p_id, q_id] = rs_pair(Permutation({1, 2, 3, 4}));
  CHECK(p_id.rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(p_id == q_id);

  CHECK(rs_shape(Permutation({3, 2, 1})) == std::vector<int>{1, 1, 1});

  const auto [p2143, q2143] = rs_pair(Permutation({2, 1, 4, 3}));
  CHECK(p2143.shape() == std::vector<int>{2, 2});
  CHECK(p2143 == q2143);
  CHECK(p2143.rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  CHECK(rs_pair(Permutation{}).first.boxes() == 0);
  CHECK(rs_shape(Permutation{}).empty());
}

TEST_CASE("rs invariants on small symmetric groups") {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto [P, Q] = rs_pair(p);
      REQUIRE(P.shape() == Q.shape());
      const auto shape = P.shape();
      REQUIRE((shape.empty() ? 0 : shape.front()) == rank_profile(p).lis_length);
      REQUIRE((P == Q) == is_involution(p));
      if (is_involution(p)) REQUIRE(odd_columns(P) == fixed_points(p));
    });
  }
}

TEST_CASE("odd column counting") {
  CHECK(odd_columns(YoungTableau::from_rows({{1, 2, 3, 4, 5}})) == 5);
  CHECK(odd_columns(YoungTableau::from_rows({{1, 2}, {3, 4}})) == 0);
  CHECK(odd_columns(YoungTableau::from_rows({{1, 3, 5}, {2, 4}})) == 1);
  CHECK(odd_columns(YoungTableau{}) == 0);
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(YoungTableau::from_rows({{1, 3}, {2, 4, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungTableau::from_rows({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungTableau::from_rows({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungTableau::from_rows({{3, 4}, {1, 2}}), std::invalid_argument);
  CHECK(YoungTableau::from_rows({{1, 2, 5}, {3, 4}}).to_string() == "1 2 5\n3 4\n");
}
