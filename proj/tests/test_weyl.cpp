#include <catch2/catch_amalgamated.hpp>

#include "eo/signed_permutation.hpp"
#include "eo/verify.hpp"

using namespace eo;

TEST_CASE("simple reflections") {
  CHECK(simple_reflection(2, 1).images() == std::vector<int>{2, 1, 4, 3});
  CHECK(simple_reflection(2, 2).images() == std::vector<int>{1, 3, 2, 4});
  CHECK(simple_reflection(1, 1).images() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(simple_reflection(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(simple_reflection(2, 0), std::invalid_argument);
}

TEST_CASE("group element validation") {
  CHECK_THROWS_AS(SignedPermutation(1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation(1, {2}), std::invalid_argument);
  // bijection but not symmetric
  CHECK_THROWS_AS(SignedPermutation(2, {2, 1, 3, 4}), std::invalid_argument);
}

TEST_CASE("composition convention (u*w)(i) = u(w(i))") {
  const auto s1 = simple_reflection(2, 1);
  const auto s2 = simple_reflection(2, 2);
  CHECK(compose(s1, s1).is_identity());
  CHECK(compose(s1, s2).images() == std::vector<int>{2, 4, 1, 3});
  const auto x = longest_x(2);
  CHECK(compose(x, x).is_identity());
  CHECK_THROWS_AS(compose(s1, simple_reflection(1, 1)), std::invalid_argument);
}

TEST_CASE("longest element x of IWI") {
  CHECK(longest_x(1).images() == std::vector<int>{2, 1});
  CHECK(longest_x(2).images() == std::vector<int>{3, 4, 1, 2});
  CHECK(longest_x(3).images() == std::vector<int>{4, 5, 6, 1, 2, 3});
  for (int g = 1; g <= 3; ++g) {
    const auto x = longest_x(g);
    CHECK(compose(x, x).is_identity());
    CHECK(in_WI(x));
    CHECK(in_WI(x.inverse()));
    int best = 0;
    for (const auto& w : enumerate_group(g))
      if (in_WI(w) && in_WI(w.inverse())) best = std::max(best, length(w));
    CHECK(length(x) == best);
  }
}

TEST_CASE("length by greedy descent") {
  CHECK(length(SignedPermutation::identity(3)) == 0);
  for (int g = 1; g <= 3; ++g)
    for (int i = 1; i <= g; ++i) CHECK(length(simple_reflection(g, i)) == 1);
  CHECK(length(longest_x(2)) == 3);
}

TEST_CASE("length agrees with BFS distance and the inversion formula, g <= 3") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& w : enumerate_group(g)) {
      const int l = length(w);
      CHECK(l == length_by_bfs(w));
      CHECK(l == length_by_inversions(w));
    }
}

TEST_CASE("left multiplication by a simple reflection changes length by one") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& w : enumerate_group(g))
      for (int i = 1; i <= g; ++i) {
        const int d = length(compose(simple_reflection(g, i), w)) - length(w);
        CHECK((d == 1 || d == -1));
      }
}

TEST_CASE("Bruhat order basics") {
  const auto id1 = SignedPermutation::identity(1);
  const auto s1 = simple_reflection(1, 1);
  CHECK(bruhat_leq(id1, s1));
  CHECK_FALSE(bruhat_leq(s1, id1));
  const auto x2 = longest_x(2);
  CHECK(bruhat_leq(simple_reflection(2, 2), x2));
  for (const auto& w : enumerate_group(2)) CHECK(bruhat_leq(SignedPermutation::identity(2), w));
}

TEST_CASE("Bruhat rank-matrix criterion matches the subword oracle, g <= 2") {
  const auto res = check_bruhat(2);
  CHECK(res.cases == 68);
  CHECK(res.ok());
}

TEST_CASE("v <= w forces length(v) <= length(w) with equality only at v = w") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& v : enumerate_group(g))
      for (const auto& w : enumerate_group(g)) {
        if (!bruhat_leq(v, w)) continue;
        if (v == w)
          CHECK(length(v) == length(w));
        else
          CHECK(length(v) < length(w));
      }
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(1).size() == 2);
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(3).size() == 48);
  CHECK_THROWS_AS(enumerate_group(9), std::invalid_argument);
  const auto all = enumerate_group(3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_reps(1, full_I(1), CosetSide::Right).size() == 2);
  const auto wi2 = min_coset_reps(2, full_I(2), CosetSide::Right);
  REQUIRE(wi2.size() == 4);
  CHECK(wi2[0].images() == std::vector<int>{1, 2, 3, 4});
  CHECK(wi2[1].images() == std::vector<int>{1, 3, 2, 4});
  CHECK(wi2[2].images() == std::vector<int>{2, 4, 1, 3});
  CHECK(wi2[3].images() == std::vector<int>{3, 4, 1, 2});
  for (int g = 1; g <= 6; ++g)
    CHECK(min_coset_reps(g, full_I(g), CosetSide::Right).size() == (1u << g));
  // direct construction agrees with the exhaustive filter
  for (int g = 1; g <= 4; ++g) {
    std::vector<SignedPermutation> filtered;
    for (const auto& w : enumerate_group(g))
      if (in_WI(w)) filtered.push_back(w);
    CHECK(min_coset_reps(g, full_I(g), CosetSide::Right) == filtered);
  }
  // general J via filter: W^{J} at g = 3, J = {1}
  const auto wj = min_coset_reps(3, SubsetJ(3, {1}), CosetSide::Right);
  for (const auto& w : wj) CHECK(w(1) < w(2));
  CHECK(wj.size() == enumerate_group(3).size() / 2);
  // left representatives are inverses of right ones
  auto left = min_coset_reps(3, SubsetJ(3, {1}), CosetSide::Left);
  for (const auto& w : left) CHECK(w.inverse()(1) < w.inverse()(2));
}

TEST_CASE("minimal representatives minimize length in their coset") {
  for (int g = 1; g <= 3; ++g) {
    const SubsetJ J = full_I(g);
    const auto WJ = parabolic_subgroup(J);
    for (const auto& w : min_coset_reps(g, J, CosetSide::Right))
      for (const auto& u : WJ)
        if (!u.is_identity()) CHECK(length(compose(w, u)) > length(w));
  }
}

TEST_CASE("twisted parabolic subsets") {
  const SubsetJ J2(2, {1});
  CHECK(twisted_parabolic(SignedPermutation::identity(2), J2) == J2);
  CHECK(twisted_parabolic(longest_x(2), J2) == J2);
  CHECK(twisted_parabolic(longest_x(3), SubsetJ(3, {1})) == SubsetJ(3, {2}));
  // x conjugation realizes the pattern {g - i}
  for (int g = 2; g <= 4; ++g)
    for (int i = 1; i <= g - 1; ++i)
      CHECK(twisted_parabolic(longest_x(g), SubsetJ(g, {i})) == SubsetJ(g, {g - i}));
}

TEST_CASE("subset validation") {
  CHECK_THROWS_AS(SubsetJ(2, {2}), std::invalid_argument);  // g itself is never a member
  CHECK_THROWS_AS(SubsetJ(3, {0}), std::invalid_argument);
  CHECK(SubsetJ(3, {2, 1}).members == std::vector<int>{1, 2});
}
