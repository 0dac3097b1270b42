#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "orbichi/gspace.hpp"
#include "test_helpers.hpp"

using namespace orbichi;
using namespace testutil;

TEST_CASE("descriptor construction from tables") {
  FiniteGroup z2 = cyclic_group(2);

  SECTION("circle with reflection") {
    GSpaceDescriptor d = circle_with_reflection();
    CHECK(d.chi_whole() == 0);
    std::vector<int> refl = {1};
    CHECK(d.chi_generated(refl) == 2);
  }

  SECTION("point descriptor is all ones") {
    GSpaceDescriptor d = point_descriptor(symmetric_group(3).group);
    for (int c = 0; c < d.class_count(); ++c) CHECK(d.class_chi(c) == 1);
  }

  SECTION("missing classes are reported") {
    CHECK_THROWS_AS(descriptor_from_table(z2, {{{}, 0}}), MissingClass);
  }

  SECTION("duplicate and conflicting keys are distinguished") {
    CHECK_THROWS_AS(descriptor_from_table(z2, {{{}, 0}, {{0}, 0}, {{1}, 2}}),
                    DuplicateClass);
    PermutationGroup s3 = symmetric_group(3);
    int t1 = *s3.index_of({1, 0, 2});
    int t2 = *s3.index_of({0, 2, 1});  // conjugate transposition
    int c3 = *s3.index_of({1, 2, 0});
    CHECK_THROWS_AS(
        descriptor_from_table(
            s3.group,
            {{{}, 3}, {{t1}, 1}, {{t2}, 2}, {{c3}, 0}, {{t1, c3}, 0}}),
        ConjugacyConflict);
  }
}

TEST_CASE("descriptors from literal G-sets") {
  FiniteGroup z2 = cyclic_group(2);

  SECTION("regular Z/2-set") {
    GSpaceDescriptor d = descriptor_from_gset(regular_gset(z2), z2);
    CHECK(d.chi_whole() == 2);
    std::vector<int> g = {1};
    CHECK(d.chi_generated(g) == 0);
  }

  SECTION("one point is all ones") {
    FiniteGSet pt{1, {{0}, {0}}};
    GSpaceDescriptor d = descriptor_from_gset(pt, z2);
    for (int c = 0; c < d.class_count(); ++c) CHECK(d.class_chi(c) == 1);
  }

  SECTION("natural symmetric-3 action marks") {
    PermutationGroup s3 = symmetric_group(3);
    GSpaceDescriptor d = descriptor_from_gset(natural_gset(s3), s3.group);
    CHECK(d.chi_whole() == 3);
    std::vector<int> t = {*s3.index_of({1, 0, 2})};
    std::vector<int> c = {*s3.index_of({1, 2, 0})};
    std::vector<int> both = {t[0], c[0]};
    CHECK(d.chi_generated(t) == 1);
    CHECK(d.chi_generated(c) == 0);
    CHECK(d.chi_generated(both) == 0);
  }

  SECTION("marks are monotone under containment") {
    PermutationGroup s3 = symmetric_group(3);
    GSpaceDescriptor d = descriptor_from_gset(natural_gset(s3), s3.group);
    auto subs = all_subgroups(s3.group);
    for (const Subgroup& h : subs)
      for (const Subgroup& k : subs) {
        bool contained = std::includes(k.elements.begin(), k.elements.end(),
                                       h.elements.begin(), h.elements.end());
        if (contained) CHECK(d.chi_subgroup(k) <= d.chi_subgroup(h));
      }
  }

  SECTION("invalid actions are rejected") {
    FiniteGSet bad{2, {{0, 1}, {0, 0}}};
    CHECK_THROWS_AS(descriptor_from_gset(bad, z2), InvalidAction);
  }
}

TEST_CASE("invariant building blocks") {
  FiniteGroup z2 = cyclic_group(2);
  GSpaceDescriptor circle = circle_with_reflection();

  SECTION("hom fixed sets go through the generated image") {
    Homomorphism trivial{{0}};
    Homomorphism refl{{1}};
    CHECK(chi_of_hom_fixed(circle, trivial) == 0);
    CHECK(chi_of_hom_fixed(circle, refl) == 2);
  }

  SECTION("chi_quotient by the full group") {
    CHECK(chi_quotient(circle, whole_group(z2)) == 1);
  }

  SECTION("chi_quotient by the trivial group is the constrained chi") {
    std::vector<int> refl = {1};
    CHECK(chi_quotient(circle, trivial_subgroup(z2), refl) ==
          circle.chi_generated(refl));
  }

  SECTION("free quotient of the regular set") {
    GSpaceDescriptor d = descriptor_from_gset(regular_gset(z2), z2);
    CHECK(chi_quotient(d, whole_group(z2)) == 1);
  }

  SECTION("non-centralizing constraints are refused") {
    PermutationGroup s3 = symmetric_group(3);
    GSpaceDescriptor d = point_descriptor(s3.group);
    std::vector<int> c3 = {*s3.index_of({1, 2, 0})};
    CHECK_THROWS_AS(chi_quotient(d, whole_group(s3.group), c3),
                    NotCentralizing);
  }

  SECTION("non-integral Burnside counts are surfaced") {
    GSpaceDescriptor odd = descriptor_from_table(z2, {{{}, 1}, {{1}, 0}});
    CHECK_THROWS_AS(chi_quotient(odd, whole_group(z2)), NonIntegerResult);
  }

  SECTION("chi_es") {
    CHECK(chi_es(2, 1) == 2);
    CHECK(chi_es(1, 4) == Rational(1, 4));
    CHECK(chi_es(1, 6) == Rational(1, 6));
  }
}

TEST_CASE("wreath fixed chi") {
  FiniteGroup z2 = cyclic_group(2);
  GSpaceDescriptor circle = circle_with_reflection();
  WreathGroup w(z2, 2);

  SECTION("the swap fixes the diagonal") {
    Homomorphism theta{{w.encode({{0, 0}, {1, 0}})}};
    CHECK(wreath_fixed_chi(circle, w, theta) == 0);  // chi(M)
    GSpaceDescriptor pt = point_descriptor(z2);
    CHECK(wreath_fixed_chi(pt, w, theta) == 1);
  }

  SECTION("a twisted swap lands in the reflection-fixed set") {
    Homomorphism theta{{w.encode({{1, 0}, {1, 0}})}};
    CHECK(wreath_fixed_chi(circle, w, theta) == 2);  // chi(M^{Z/2})
  }

  SECTION("the trivial hom gives the full power") {
    Homomorphism theta{{w.group().identity()}};
    GSpaceDescriptor d = descriptor_from_gset(regular_gset(z2), z2);
    CHECK(wreath_fixed_chi(d, w, theta) == 4);
  }

  SECTION("conjugate homs have equal fixed chi") {
    for (int x = 0; x < w.group().order(); ++x) {
      Homomorphism theta{{x}};
      Integer base = wreath_fixed_chi(circle, w, theta);
      for (int c = 0; c < w.group().order(); ++c) {
        Homomorphism conj{{w.group().conjugate(c, x)}};
        CHECK(wreath_fixed_chi(circle, w, conj) == base);
      }
    }
  }
}

TEST_CASE("the literal wreath oracle") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGSet x = regular_gset(z2);
  WreathGroup w(z2, 2);

  SECTION("twisted swap has no fixed tuples on the regular set") {
    Homomorphism theta{{w.encode({{1, 0}, {1, 0}})}};
    CHECK(gset_wreath_oracle(x, z2, w, theta) == 0);
  }

  SECTION("trivial hom fixes everything") {
    Homomorphism theta{{w.group().identity()}};
    CHECK(gset_wreath_oracle(x, z2, w, theta) == 4);
  }

  SECTION("degenerate wreath recovers plain fixed points") {
    WreathGroup w1(z2, 1);
    Homomorphism theta{{w1.encode({{1}, {0}})}};
    CHECK(gset_wreath_oracle(x, z2, w1, theta) == 0);
    Homomorphism id{{w1.group().identity()}};
    CHECK(gset_wreath_oracle(x, z2, w1, id) == 2);
  }

  SECTION("scan cap") {
    Caps caps;
    caps.gset_points = 3;
    Homomorphism theta{{w.group().identity()}};
    CHECK_THROWS_AS(gset_wreath_oracle(x, z2, w, theta, caps),
                    SizeCapExceeded);
  }
}

TEST_CASE("oracle equivalence on small configurations") {
  // The load-bearing identity chi((M^n)^theta) = |(X^n)^theta|, checked for
  // every hom on a couple of (X, Gamma, n) triples; the acceptance suite
  // runs the full matrix.
  FiniteGroup z2 = cyclic_group(2);
  FiniteGSet x = z2_four_points();
  GSpaceDescriptor d = descriptor_from_gset(x, z2);

  for (int n = 1; n <= 3; ++n) {
    WreathGroup w(z2, n);
    for (const GroupPresentation& src :
         {free_abelian_presentation(1), free_abelian_presentation(2)}) {
      auto homs = enumerate_homs(src, w.group());
      for (const Homomorphism& theta : homs)
        CHECK(wreath_fixed_chi(d, w, theta) ==
              gset_wreath_oracle(x, z2, w, theta));
    }
  }
}

TEST_CASE("descriptor linearity scaffolding") {
  FiniteGroup z2 = cyclic_group(2);
  GSpaceDescriptor a = descriptor_from_gset(regular_gset(z2), z2);
  GSpaceDescriptor b = descriptor_from_gset(z2_four_points(), z2);
  GSpaceDescriptor sum = descriptor_sum(a, b);
  std::vector<int> refl = {1};
  CHECK(sum.chi_whole() == 6);
  CHECK(sum.chi_generated(refl) == 2);
  GSpaceDescriptor neg = descriptor_scale(a, -1);
  CHECK(neg.chi_whole() == -2);
}
