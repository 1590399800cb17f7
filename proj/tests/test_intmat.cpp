#include <doctest.h>

#include <random>

#include "phk/intmat.hpp"

using namespace phk;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int max_dim, i64 max_abs) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  int r = dim(rng), c = dim(rng);
  std::uniform_int_distribution<i64> val(-max_abs, max_abs);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = val(rng);
  return m;
}

void check_snf_certificate(const IntMat& a) {
  SnfResult s = smith_normal_form(a);
  CHECK(s.u.mul(a).mul(s.v) == s.d);
  CHECK(std::abs(s.u.det()) == 1);
  CHECK(std::abs(s.v.det()) == 1);
  int lim = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < lim; ++i) {
    for (int j = 0; j < lim; ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
    CHECK(s.d.at(i, i) >= 0);
  }
  for (int i = 0; i + 1 < lim; ++i) {
    i64 a0 = s.d.at(i, i), a1 = s.d.at(i + 1, i + 1);
    if (a0 == 0) CHECK(a1 == 0);
    if (a0 != 0) CHECK(a1 % a0 == 0);
  }
}

}  // namespace

TEST_CASE("snf on fixed matrices") {
  SUBCASE("zero matrix") {
    IntMat z(3, 2);
    SnfResult s = smith_normal_form(z);
    CHECK(s.d.is_zero());
    CHECK(s.u == IntMat::identity(3));
    CHECK(s.v == IntMat::identity(2));
  }
  SUBCASE("identity") {
    SnfResult s = smith_normal_form(IntMat::identity(4));
    CHECK(s.d == IntMat::identity(4));
  }
  SUBCASE("diag(2,3) becomes diag(1,6)") {
    IntMat a = IntMat::from_rows({{2, 0}, {0, 3}});
    SnfResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u.mul(a).mul(s.v) == s.d);
  }
  SUBCASE("rectangular with torsion") {
    IntMat a = IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    check_snf_certificate(a);
    auto d = snf_diagonal(a);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 2);
    // det(a) = 2*2*78? just check the chain multiplies to |det|
    CHECK(d[0] * d[1] * d[2] == std::abs(a.det()));
  }
}

TEST_CASE("snf certificate on random matrices") {
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 300; ++iter) check_snf_certificate(random_matrix(rng, 6, 9));
}

TEST_CASE("kernel and span bases") {
  IntMat a = IntMat::from_rows({{1, 2, 3}, {2, 4, 6}});
  IntMat k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK(a.mul(k).is_zero());

  IntMat span = column_span_basis(a.transpose());
  CHECK(span.cols() == 1);
  CHECK(lattice_contains(span, {1, 2, 3}));
  CHECK(lattice_contains(span, {-2, -4, -6}));
  CHECK(!lattice_contains(span, {1, 2, 4}));
}

TEST_CASE("span basis generates the same lattice") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    IntMat g = random_matrix(rng, 5, 5);
    IntMat b = column_span_basis(g);
    // every generator is in span(b)
    for (int c = 0; c < g.cols(); ++c) CHECK(lattice_contains(b, g.col_vec(c)));
    // every basis vector is an integer combination of generators
    if (g.cols() > 0)
      for (int c = 0; c < b.cols(); ++c) {
        IntMat coeffs;
        CHECK(solve_in_span(column_span_basis(g), b.col(c), &coeffs));
      }
  }
}

TEST_CASE("preimage basis") {
  // a x in span{(2,0),(0,3)} for a = [[1,0],[0,1]] is the lattice 2Z x 3Z
  IntMat a = IntMat::identity(2);
  IntMat lat = IntMat::from_rows({{2, 0}, {0, 3}});
  IntMat pre = preimage_basis(a, lat);
  CHECK(pre.cols() == 2);
  CHECK(lattice_contains(pre, {2, 0}));
  CHECK(lattice_contains(pre, {0, 3}));
  CHECK(!lattice_contains(pre, {1, 0}));
  CHECK(!lattice_contains(pre, {0, 1}));
}

TEST_CASE("overflow is detected, not wrapped") {
  i64 big = i64(1) << 62;
  CHECK_THROWS_AS((void)checked_mul(big, 4), ArithmeticOverflow);
  CHECK_THROWS_AS((void)checked_add(big, big), ArithmeticOverflow);
}

TEST_CASE("determinant") {
  CHECK(IntMat::identity(3).det() == 1);
  CHECK(IntMat::from_rows({{2, 1}, {1, 1}}).det() == 1);
  CHECK(IntMat::from_rows({{1, 2}, {2, 4}}).det() == 0);
  CHECK(IntMat::from_rows({{0, 1}, {1, 0}}).det() == -1);
}
