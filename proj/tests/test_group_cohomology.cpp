#include <doctest.h>

#include "phk/group_cohomology.hpp"

using namespace phk;

namespace {

// Independent oracle for cyclic groups with trivial action: the 2-periodic
// resolution gives the cochain complex  Z/m --0--> Z/m --k--> Z/m --0--> ...
// Compute kernels and images by exhaustive counting in Z/m.
i64 cyclic_cohomology_order(int k, i64 m, int n) {
  auto count_ker = [&](i64 mult) {
    i64 c = 0;
    for (i64 x = 0; x < m; ++x)
      if (mult * x % m == 0) ++c;
    return c;
  };
  auto count_im = [&](i64 mult) {
    std::vector<bool> hit(size_t(m), false);
    i64 c = 0;
    for (i64 x = 0; x < m; ++x)
      if (!hit[size_t(mult * x % m)]) {
        hit[size_t(mult * x % m)] = true;
        ++c;
      }
    return c;
  };
  if (n == 0) return count_ker(0) / 1;  // kernel of the first map (which is multiplication by 0? no: degree 0 map is x -> 0 only for odd steps)
  // maps alternate: delta^0 = 0, delta^1 = k, delta^2 = 0, ...
  auto delta = [&](int i) { return i % 2 == 0 ? i64(0) : i64(k); };
  return count_ker(delta(n)) / count_im(delta(n - 1));
}

}  // namespace

TEST_CASE("cyclic groups, trivial action, against the periodic oracle") {
  for (int k : {2, 3, 4, 5, 6})
    for (i64 m : {2, 3, 4}) {
      GroupAction a = GroupAction::trivial(FiniteGroup::cyclic(k), FinAb::cyclic(m));
      auto h = group_cohomology(a, 4);
      for (int n = 0; n <= 4; ++n) {
        INFO("k=", k, " m=", m, " n=", n);
        CHECK(h[n].is_finite());
        CHECK(h[n].order() == cyclic_cohomology_order(k, m, n));
      }
    }
}

TEST_CASE("fixed values") {
  SUBCASE("H^n(Z/2; Z/2) = Z/2 in every degree") {
    auto h = group_cohomology(GroupAction::trivial(FiniteGroup::cyclic(2), FinAb::cyclic(2)), 4);
    for (int n = 0; n <= 4; ++n) CHECK(h[n] == FinAb::cyclic(2));
  }
  SUBCASE("H^1(Z/3; Z/2) = 0") {
    auto h = group_cohomology(GroupAction::trivial(FiniteGroup::cyclic(3), FinAb::cyclic(2)), 1);
    CHECK(h[0] == FinAb::cyclic(2));
    CHECK(h[1] == FinAb::trivial());
  }
  SUBCASE("H^0 is the fixed module") {
    FinAb m{{2, 4}, 0};
    auto h = group_cohomology(GroupAction::trivial(FiniteGroup::dihedral(3), m), 0);
    CHECK(h[0] == m);
  }
}

TEST_CASE("inversion action of Z/2 on Z/3 kills everything") {
  GroupAction a = GroupAction::cyclic_units(FiniteGroup::cyclic(2), 3, {1, 2});
  REQUIRE(!a.validate().has_value());
  auto h = group_cohomology(a, 3);
  for (int n = 0; n <= 3; ++n) CHECK(h[n] == FinAb::trivial());
}

TEST_CASE("invalid actions are rejected") {
  // "action" of Z/2 on Z/4 by multiplication by 2 is not an automorphism
  GroupAction bad = GroupAction::cyclic_units(FiniteGroup::cyclic(2), 4, {1, 2});
  CHECK(bad.validate().has_value());
  CHECK_THROWS(group_cohomology(bad, 1));
}

TEST_CASE("nonabelian: H^*(S3; Z/3) pattern") {
  auto h = group_cohomology(GroupAction::trivial(FiniteGroup::dihedral(3), FinAb::cyclic(3)), 3);
  CHECK(h[0] == FinAb::cyclic(3));
  CHECK(h[1] == FinAb::trivial());
  CHECK(h[2] == FinAb::trivial());
  CHECK(h[3] == FinAb::cyclic(3));
}
