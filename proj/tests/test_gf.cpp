#include <catch2/catch_amalgamated.hpp>

#include "eo/gf.hpp"

using namespace eo;

TEST_CASE("prime field arithmetic") {
  const Field F = Field::prime(7);
  CHECK(F.q() == 7);
  CHECK(F.add(3, 5) == 1);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.neg(2) == 5);
  for (Field::Elt a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
}

TEST_CASE("extension fields") {
  CHECK(Field::find_modulus(2, 2) == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x+1)^2
  const Field F4(2, 2, {1, 1, 1});
  CHECK(F4.q() == 4);
  for (Field::Elt a = 1; a < 4; ++a) {
    CHECK(F4.mul(a, F4.inv(a)) == 1);
    CHECK(F4.frob(F4.frob(a)) == a);
    CHECK(F4.frob_inv(F4.frob(a)) == a);
  }
  // the generator satisfies its modulus: x^2 = x + 1
  const Field::Elt x = F4.from_coeffs({0, 1});
  CHECK(F4.mul(x, x) == F4.add(x, 1));

  const Field F27(3, 3, Field::find_modulus(3, 3));
  CHECK(F27.q() == 27);
  Field::Elt prod = 1;
  for (Field::Elt a = 1; a < 27; ++a) {
    CHECK(F27.mul(a, F27.inv(a)) == 1);
    prod = F27.mul(prod, a);
  }
  CHECK(prod == F27.neg(1));  // product of all units is -1
  // Frobenius has order m
  const Field::Elt gen = F27.from_coeffs({0, 1});
  CHECK(F27.frob(F27.frob(F27.frob(gen))) == gen);
  CHECK(F27.frob(gen) != gen);
}

TEST_CASE("rref and rank") {
  const Field F = Field::prime(3);
  Mat m(3, 4);
  // rows: (1,2,0,1), (2,1,0,2), (0,0,1,1); rows 1+2 are dependent mod 3
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 3) = 1;
  m.at(1, 0) = 2; m.at(1, 1) = 1; m.at(1, 3) = 2;
  m.at(2, 2) = 1; m.at(2, 3) = 1;
  CHECK(rank(F, m) == 2);
  const Mat r = row_space(F, m);
  CHECK(r.rows == 2);
  CHECK(row_space(F, r) == r);  // canonical form is idempotent
}

TEST_CASE("nullspace" ) {
  const Field F = Field::prime(2);
  Mat m(2, 4);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 2) = 1; m.at(1, 3) = 1;
  const Mat n = nullspace(F, m);
  CHECK(n.rows == 2);
  CHECK(mat_is_zero(mat_mul(F, m, mat_transpose(n))));
  // rank-nullity across random-ish small matrices
  const Field F5 = Field::prime(5);
  for (int seed = 0; seed < 20; ++seed) {
    Mat a(3, 5);
    unsigned state = seed * 2654435761u + 1;
    for (auto& v : a.a) {
      state = state * 1664525u + 1013904223u;
      v = state % 5;
    }
    CHECK(rank(F5, a) + nullspace(F5, a).rows == 5);
  }
}

TEST_CASE("subspace operations") {
  const Field F = Field::prime(2);
  Mat u(1, 4), v(2, 4);
  u.at(0, 0) = 1; u.at(0, 1) = 1;          // <e1+e2>
  v.at(0, 0) = 1; v.at(1, 1) = 1;          // <e1, e2>
  CHECK(subspace_contains(F, v, u));
  CHECK_FALSE(subspace_contains(F, u, v));
  CHECK(intersection_dim(F, u, v) == 1);
  CHECK(subspace_eq(F, intersection(F, u, v, 4), row_space(F, u)));
  CHECK(subspace_sum(F, u, v).rows == 2);
}

TEST_CASE("image, preimage and twist") {
  const Field F4(2, 2, {1, 1, 1});
  // M: e1 -> e2, e2 -> 0 over F_4
  Mat M(2, 2);
  M.at(1, 0) = 1;
  Mat u(1, 2);
  u.at(0, 0) = 1;  // <e1>
  CHECK(subspace_eq(F4, image_of(F4, M, u), [&] {
    Mat e2(1, 2);
    e2.at(0, 1) = 1;
    return e2;
  }()));
  const Mat pre = preimage_of(F4, M, u);  // {v : Mv in <e1>} = ker M = <e2>
  CHECK(pre.rows == 1);
  CHECK(pre.at(0, 1) == 1);
  // twist of a subspace spanned by a non-rational vector moves it
  Mat w(1, 2);
  w.at(0, 0) = 1;
  w.at(0, 1) = F4.from_coeffs({0, 1});
  const Mat tw = twist(F4, w);
  CHECK(tw.rows == 1);
  CHECK_FALSE(subspace_eq(F4, tw, w));
  CHECK(subspace_eq(F4, twist(F4, tw), w));  // Frobenius has order 2
}
