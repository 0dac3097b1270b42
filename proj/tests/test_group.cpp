#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "orbichi/group.hpp"
#include "orbichi/wreath.hpp"

using namespace orbichi;

TEST_CASE("make_group validation") {
  SECTION("trivial group") {
    FiniteGroup g = make_group({{0}});
    CHECK(g.order() == 1);
    CHECK(g.identity() == 0);
  }

  SECTION("Z/2 from its table") {
    FiniteGroup g = make_group({{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.identity() == 0);
    CHECK(g.inv(1) == 1);
  }

  SECTION("non-latin table is rejected with a witness") {
    CHECK_THROWS_AS(make_group({{0, 1}, {1, 1}}), NotAGroup);
    try {
      make_group({{0, 1}, {1, 1}});
    } catch (const NotAGroup& e) {
      CHECK(std::string(e.what()).find("not a permutation") != std::string::npos);
    }
  }

  SECTION("non-associative latin square is rejected with a triple") {
    // Order-5 latin square with identity 0 that is not a group (no
    // associative quasigroup of order 5 has this row pattern).
    std::vector<std::vector<int>> t = {{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
    try {
      make_group(t);
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
  }

  SECTION("order cap") {
    Caps caps;
    caps.order = 3;
    CHECK_THROWS_AS(cyclic_group(4, caps), OrderCapExceeded);
  }
}

TEST_CASE("builtin groups") {
  SECTION("symmetric 3 has order 6") {
    CHECK(symmetric_group(3).group.order() == 6);
  }

  SECTION("cyclic 4: generator has order 4") {
    FiniteGroup g = cyclic_group(4);
    CHECK(g.order() == 4);
    CHECK(g.element_order(1) == 4);
  }

  SECTION("closure of {(12),(123)} in degree 3 has order 6") {
    PermutationGroup pg = permutation_group({{1, 0, 2}, {1, 2, 0}});
    CHECK(pg.group.order() == 6);
  }

  SECTION("generators of unequal degree are rejected") {
    CHECK_THROWS_AS(permutation_group({{1, 0}, {1, 2, 0}}), DegreeMismatch);
  }

  SECTION("direct product orders multiply") {
    FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(g.order() == 6);
    CHECK(g.element_order(g.mul(0, 0)) == 1);
  }

  SECTION("builtins pass full validation") {
    for (const FiniteGroup& g :
         {cyclic_group(6), symmetric_group(3).group,
          direct_product(cyclic_group(2), cyclic_group(2))}) {
      std::vector<std::vector<int>> table(g.order(),
                                          std::vector<int>(g.order()));
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
      CHECK_NOTHROW(make_group(table));
    }
  }
}

TEST_CASE("conjugacy classes") {
  SECTION("symmetric 3: sizes 1, 3, 2") {
    auto classes = conjugacy_classes(symmetric_group(3).group);
    REQUIRE(classes.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  }

  SECTION("abelian groups split into singletons") {
    auto classes = conjugacy_classes(cyclic_group(5));
    CHECK(classes.size() == 5);
  }

  SECTION("class equation and centralizer duality") {
    for (const FiniteGroup& g : {symmetric_group(3).group,
                                 wreath_product(cyclic_group(2), 2).group()}) {
      std::size_t total = 0;
      for (const auto& cls : conjugacy_classes(g)) {
        total += cls.size();
        int rep[] = {cls.front()};
        CHECK(static_cast<int>(cls.size()) * centralizer(g, rep).order() ==
              g.order());
      }
      CHECK(total == static_cast<std::size_t>(g.order()));
    }
  }
}

TEST_CASE("centralizer, normalizer, generated subgroups") {
  PermutationGroup s3 = symmetric_group(3);
  const FiniteGroup& g = s3.group;

  SECTION("centralizer of a 3-cycle has order 3") {
    int c3 = *s3.index_of({1, 2, 0});
    int elems[] = {c3};
    CHECK(centralizer(g, elems).order() == 3);
  }

  SECTION("the whole group self-normalizes") {
    CHECK(normalizer(g, whole_group(g)) == whole_group(g));
  }

  SECTION("an involution generates an order-2 subgroup") {
    int t = *s3.index_of({1, 0, 2});
    int elems[] = {t};
    CHECK(subgroup_generated(g, elems).order() == 2);
  }

  SECTION("generation is idempotent and normalizer contains centralizer") {
    for (int x = 0; x < g.order(); ++x) {
      int elems[] = {x};
      Subgroup h = subgroup_generated(g, elems);
      CHECK(subgroup_generated(g, h.elements) == h);
      Subgroup n = normalizer(g, h);
      Subgroup c = centralizer(g, h.elements);
      CHECK(n.order() >= h.order());
      for (int y : c.elements) CHECK(n.contains(y));
    }
  }
}

TEST_CASE("subgroup lattice") {
  SECTION("Z/2 has 2 subgroups") {
    CHECK(all_subgroups(cyclic_group(2)).size() == 2);
  }

  SECTION("Z/4 has 3 subgroups") {
    CHECK(all_subgroups(cyclic_group(4)).size() == 3);
  }

  SECTION("S3 has 6 subgroups in 4 classes") {
    PermutationGroup s3 = symmetric_group(3);
    auto subs = all_subgroups(s3.group);
    CHECK(subs.size() == 6);
    CHECK(subgroup_conjugacy_classes(s3.group, subs).size() == 4);

    // Cross-check against the exhaustive scan over all element subsets of
    // divisor size.
    std::set<std::vector<int>> expected;
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<int> members;
      for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) members.push_back(i);
      if (members.empty() || 6 % members.size()) continue;
      Subgroup h = subgroup_generated(s3.group, members);
      if (static_cast<int>(members.size()) == h.order() &&
          h.elements == members)
        expected.insert(members);
    }
    CHECK(expected.size() == subs.size());
  }

  SECTION("the lattice cap is enforced") {
    Caps caps;
    caps.subgroup_lattice = 4;
    CHECK_THROWS_AS(all_subgroups(symmetric_group(3).group, caps),
                    OrderCapExceeded);
  }

  SECTION("subgroup class sizes match normalizer indices") {
    PermutationGroup s3 = symmetric_group(3);
    auto subs = all_subgroups(s3.group);
    for (const auto& cls : subgroup_conjugacy_classes(s3.group, subs)) {
      const Subgroup& rep = subs[cls[0]];
      CHECK(static_cast<int>(cls.size()) * normalizer(s3.group, rep).order() ==
            s3.group.order());
    }
  }
}

TEST_CASE("wreath products") {
  FiniteGroup z2 = cyclic_group(2);

  SECTION("order and class count of wreath(Z/2, 2)") {
    WreathGroup w(z2, 2);
    CHECK(w.group().order() == 8);
    CHECK(conjugacy_classes(w.group()).size() == 5);
  }

  SECTION("multiplication follows the component twist") {
    WreathGroup w(z2, 2);
    WreathElement a{{1, 0}, {1, 0}}, b{{0, 1}, {1, 0}};
    WreathElement p = w.decode(w.group().mul(w.encode(a), w.encode(b)));
    // (g1 h_{s^-1(1)}, g2 h_{s^-1(2)}) = (1+1, 0+0) = (0, 0), st = id.
    CHECK(p.components == std::vector<int>{0, 0});
    CHECK(p.perm == identity_perm(2));
  }

  SECTION("trivial base gives the symmetric group") {
    WreathGroup w(cyclic_group(1), 4);
    CHECK(w.group().order() == 24);
    PermutationGroup s4 = symmetric_group(4);
    // The projection is an isomorphism here: flat index == Lehmer rank.
    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b)
        CHECK(w.group().mul(a, b) == s4.group.mul(a, b));
  }

  SECTION("codec round trips") {
    WreathGroup w(symmetric_group(3).group, 2);
    for (int flat = 0; flat < w.group().order(); ++flat)
      CHECK(w.encode(w.decode(flat)) == flat);
  }

  SECTION("projection is a surjective homomorphism with kernel |G|^n") {
    WreathGroup w(z2, 3);
    PermutationGroup s3 = symmetric_group(3);
    std::vector<int> kernel;
    for (int a = 0; a < w.group().order(); ++a) {
      if (w.project(a) == 0) kernel.push_back(a);
      for (int b = 0; b < w.group().order(); ++b)
        CHECK(w.project(w.group().mul(a, b)) ==
              s3.group.mul(static_cast<int>(w.project(a)),
                           static_cast<int>(w.project(b))));
    }
    CHECK(kernel.size() == 8);
  }

  SECTION("wreath tables pass full validation") {
    WreathGroup w(z2, 2);
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) table[a][b] = w.group().mul(a, b);
    CHECK_NOTHROW(make_group(table));
  }

  SECTION("order cap") {
    Caps caps;
    caps.order = 100;
    CHECK_THROWS_AS(wreath_product(z2, 4, caps), OrderCapExceeded);
  }
}
