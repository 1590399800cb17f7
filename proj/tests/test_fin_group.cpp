#include <doctest.h>

#include "phk/fin_group.hpp"

using namespace phk;

TEST_CASE("constructions satisfy the group axioms") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(7), FiniteGroup::dihedral(4),
                               FiniteGroup::dicyclic(2), FiniteGroup::alternating4(),
                               FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))}) {
    INFO(g.name);
    CHECK(!g.validate().has_value());
  }
}

TEST_CASE("element orders and abelianness") {
  FiniteGroup s3 = FiniteGroup::dihedral(3);
  CHECK(s3.n == 6);
  CHECK(!s3.is_abelian());
  CHECK(s3.num_conjugacy_classes() == 3);
  FiniteGroup q8 = FiniteGroup::dicyclic(2);
  int order2 = 0;
  for (int x = 0; x < q8.n; ++x)
    if (q8.element_order(x) == 2) ++order2;
  CHECK(order2 == 1);  // Q8 has a unique involution
  CHECK(FiniteGroup::alternating4().num_conjugacy_classes() == 4);
}

TEST_CASE("subgroups") {
  FiniteGroup s3 = FiniteGroup::dihedral(3);
  CHECK(s3.subgroups().size() == 6);        // 1, 3x C2, C3, S3
  CHECK(s3.subgroup_classes().size() == 4);  // C2s are conjugate
  FiniteGroup c6 = FiniteGroup::cyclic(6);
  CHECK(c6.subgroups().size() == 4);
}

TEST_CASE("isomorphism testing") {
  CHECK(find_isomorphism(FiniteGroup::cyclic(6),
                         FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)))
            .has_value());
  CHECK(!find_isomorphism(FiniteGroup::cyclic(4),
                          FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)))
             .has_value());
  CHECK(!find_isomorphism(FiniteGroup::dihedral(4), FiniteGroup::dicyclic(2)).has_value());
  CHECK(find_isomorphism(FiniteGroup::dihedral(3), FiniteGroup::dihedral(3)).has_value());
}

TEST_CASE("catalogue matches the known group counts") {
  auto cat = group_catalogue(15);
  // number of groups of order n, n = 1..15
  int expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  for (int n = 1; n <= 15; ++n) {
    int count = 0;
    for (const auto& g : cat)
      if (g.n == n) ++count;
    INFO("order ", n);
    CHECK(count == expected[n - 1]);
  }
  for (const auto& g : cat) CHECK(!g.validate().has_value());
  // pairwise non-isomorphic
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].n == cat[j].n) {
        INFO(cat[i].name, " vs ", cat[j].name);
        CHECK(!find_isomorphism(cat[i], cat[j]).has_value());
      }
}

TEST_CASE("table text round trip") {
  FiniteGroup g = FiniteGroup::dihedral(3);
  FiniteGroup h = FiniteGroup::parse_table_text(g.to_table_text());
  CHECK(h.table == g.table);
  CHECK_THROWS(FiniteGroup::parse_table_text("2\n0 1\n1 1\n"));  // not a group
}
