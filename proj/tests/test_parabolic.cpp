#include <catch2/catch_amalgamated.hpp>

#include "eo/parabolic.hpp"
#include "eo/verify.hpp"

using namespace eo;

TEST_CASE("parabolic datum jump sequences") {
  const auto d0 = parabolic_datum(2, SubsetJ(2, {}));
  CHECK(d0.c == 2);
  CHECK(d0.k == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(d0.ktilde == std::vector<int>{0, 1, 2, 3, 4});

  const auto d1 = parabolic_datum(2, SubsetJ(2, {1}));
  CHECK(d1.c == 1);
  CHECK(d1.k == std::vector<int>{0, 2, 4});
  CHECK(d1.ktilde == std::vector<int>{0, 2, 4});
  CHECK(d1.Jtilde == SubsetJ(2, {1}));

  const auto d2 = parabolic_datum(3, SubsetJ(3, {2}));
  CHECK(d2.c == 2);
  CHECK(d2.k == std::vector<int>{0, 1, 3, 5, 6});
  CHECK(d2.ktilde == std::vector<int>{0, 2, 3, 4, 6});
  CHECK(d2.Jtilde == SubsetJ(3, {1}));
}

TEST_CASE("datum invariants across all subsets, g <= 5") {
  for (int g = 1; g <= 5; ++g)
    for (std::uint32_t mask = 0; mask < (1u << std::max(0, g - 1)); ++mask) {
      std::vector<int> mem;
      for (int i = 1; i <= g - 1; ++i)
        if ((mask >> (i - 1)) & 1u) mem.push_back(i);
      const auto d = parabolic_datum(g, SubsetJ(g, mem));
      REQUIRE(static_cast<int>(d.k.size()) == 2 * d.c + 1);
      CHECK(d.k[0] == 0);
      CHECK(d.k[d.c] == g);
      for (int i = d.c; i <= 2 * d.c; ++i) CHECK(d.k[i] == 2 * g - d.k[2 * d.c - i]);
      for (int i = 0; i <= d.c; ++i) CHECK(d.ktilde[i] == g - d.k[d.c - i]);
      for (int i = d.c; i <= 2 * d.c; ++i) CHECK(d.ktilde[i] == 2 * g - d.ktilde[2 * d.c - i]);
    }
}

TEST_CASE("admissibility") {
  // (w, empty) is admissible for every w in W^I
  for (int g = 1; g <= 3; ++g)
    for (const auto& w : min_coset_reps(g, full_I(g), CosetSide::Right))
      CHECK(is_admissible(w, SubsetJ(g, {})));
  CHECK(is_admissible(longest_x(2), SubsetJ(2, {1})));
  CHECK(is_admissible(SignedPermutation::identity(2), SubsetJ(2, {1})));
  CHECK_FALSE(is_admissible(SignedPermutation(2, {2, 4, 1, 3}), SubsetJ(2, {1})));
  // not in W^I
  CHECK_FALSE(is_admissible(SignedPermutation(2, {2, 1, 4, 3}), SubsetJ(2, {})));
}

TEST_CASE("sigma of an admissible pair") {
  const auto p1 = sigma_of(simple_reflection(1, 1), SubsetJ(1, {}));
  CHECK(p1.sigma == std::vector<int>{1, 2});
  const auto p2 = sigma_of(SignedPermutation::identity(1), SubsetJ(1, {}));
  CHECK(p2.sigma == std::vector<int>{2, 1});
  const auto p3 = sigma_of(SignedPermutation(2, {2, 4, 1, 3}), SubsetJ(2, {}));
  CHECK(p3.sigma == std::vector<int>{1, 3, 2, 4});
  CHECK(p3.tau == std::vector<int>{2, 4, 1, 3});
  CHECK_THROWS_AS(sigma_of(SignedPermutation(2, {2, 4, 1, 3}), SubsetJ(2, {1})), std::invalid_argument);
}

TEST_CASE("weyl element from sigma") {
  CHECK(weyl_from_sigma(1, SubsetJ(1, {}), {1, 2}) == simple_reflection(1, 1));
  CHECK(weyl_from_sigma(1, SubsetJ(1, {}), {2, 1}) == SignedPermutation::identity(1));
  CHECK(weyl_from_sigma(2, SubsetJ(2, {1}), {1, 2}) == longest_x(2));
  // invalid sigma: breaks the symmetry
  CHECK_THROWS_AS(weyl_from_sigma(2, SubsetJ(2, {}), {2, 1, 3, 4}), std::invalid_argument);
  // invalid sigma: not monotone on 1..c
  CHECK_THROWS_AS(weyl_from_sigma(2, SubsetJ(2, {}), {3, 1, 4, 2}), std::invalid_argument);
}

TEST_CASE("round trip weyl_from_sigma after sigma_of, exhaustive g <= 4") {
  for (int g = 1; g <= 4; ++g)
    for (const auto& pair : all_admissible_pairs(g))
      CHECK(weyl_from_sigma(g, pair.datum.J, pair.sigma) == pair.w);
}

TEST_CASE("admissible subsets are closed under union, g <= 3") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& w : min_coset_reps(g, full_I(g), CosetSide::Right)) {
      std::vector<SubsetJ> adm;
      for (std::uint32_t mask = 0; mask < (1u << std::max(0, g - 1)); ++mask) {
        std::vector<int> mem;
        for (int i = 1; i <= g - 1; ++i)
          if ((mask >> (i - 1)) & 1u) mem.push_back(i);
        SubsetJ J(g, mem);
        if (is_admissible(w, J)) adm.push_back(J);
      }
      for (const auto& a : adm)
        for (const auto& b : adm) {
          std::vector<int> u = a.members;
          u.insert(u.end(), b.members.begin(), b.members.end());
          CHECK(is_admissible(w, SubsetJ(g, u)));
        }
    }
}

TEST_CASE("sigma preserves block sizes") {
  for (int g = 1; g <= 4; ++g)
    for (const auto& pair : all_admissible_pairs(g)) {
      const auto& k = pair.datum.k;
      for (int i = 1; i <= 2 * pair.c(); ++i)
        CHECK(k[i] - k[i - 1] == k[pair.sig(i)] - k[pair.sig(i) - 1]);
    }
}

TEST_CASE("inner lemma: sigma(r) + sigma(s) < 2c+1 for r > c >= s, r + s < 2c+1") {
  const auto res = check_inner_lemma(4);
  CHECK(res.cases > 0);
  CHECK(res.ok());
}

TEST_CASE("maximal admissible subset") {
  CHECK(max_admissible_J(SignedPermutation::identity(1)) == SubsetJ(1, {}));
  CHECK(max_admissible_J(longest_x(2)) == SubsetJ(2, {1}));
  CHECK(max_admissible_J(SignedPermutation(2, {2, 4, 1, 3})) == SubsetJ(2, {}));
  CHECK_THROWS_AS(max_admissible_J(SignedPermutation(2, {2, 1, 4, 3})), std::invalid_argument);
  // maximality: strictly larger supersets are never admissible
  for (int g = 1; g <= 4; ++g)
    for (const auto& w : min_coset_reps(g, full_I(g), CosetSide::Right)) {
      const SubsetJ Jw = max_admissible_J(w);
      CHECK(is_admissible(w, Jw));
      for (int i = 1; i <= g - 1; ++i) {
        if (Jw.contains(i)) continue;
        std::vector<int> mem = Jw.members;
        mem.push_back(i);
        CHECK_FALSE(is_admissible(w, SubsetJ(g, mem)));
      }
    }
}

TEST_CASE("w(ktilde_i) = k_{tau(i)} and affine blocks") {
  for (int g = 1; g <= 4; ++g)
    for (const auto& pair : all_admissible_pairs(g)) {
      const auto& d = pair.datum;
      for (int i = 1; i <= 2 * pair.c(); ++i) {
        CHECK(pair.w(d.ktilde[i]) == d.k[pair.tu(i)]);
        for (int a = d.ktilde[i - 1] + 1; a <= d.ktilde[i]; ++a)
          CHECK(pair.w(a) == d.k[pair.tu(i)] - (d.ktilde[i] - a));
      }
    }
}
