#include <doctest.h>

#include "procat/eilmac.hpp"
#include "procat/profinite.hpp"

using namespace procat;

TEST_CASE("circle completion is a valid pro-map") {
  const CompletionTower c = circle_completion();
  CHECK_NOTHROW(c.verify(12));
  CHECK(rep_compatible(c.map, 12));
}

TEST_CASE("pro H_1 of the classifying tower is {Z/n}") {
  const auto h = pro_h1(classifying_tower(), 10);
  for (Elem e = 0; e < 10; ++e) CHECK(h.value(e) == FinAbGroup::cyclic(static_cast<long long>(e + 1)));
}

TEST_CASE("pro-H_1 of the circle completion is not an isomorphism") {
  const CompletionTower c = circle_completion();
  const HomologyTower hx = homology_tower(c.map.source, 1), hy = homology_tower(c.tower, 1);
  const auto h1 = pro_h1_map(c.map, hx, hy);
  const AbIsoVerdict v = pro_ab_iso_check(h1, 12);
  CHECK_FALSE(v.iso);
  CHECK(v.obstruction.find("Hom(Z/2, Z) = 0") != std::string::npos);
  // the identity of {Z/n} is an isomorphism, with itself as inverse
  const auto x = cyclic_group_tower();
  const AbIsoVerdict id = pro_ab_iso_check(identity_rep(x), 6);
  CHECK(id.iso);
  CHECK(pro_ab_iso_check(identity_rep(x), 6, identity_rep(x)).iso);
}

TEST_CASE("mod p cohomology colimits of the classifying tower") {
  for (long long p : {2, 3, 5}) {
    const ProCohomology h0 = pro_cohomology(classifying_tower(), p, 0, 12);
    const ProCohomology h1 = pro_cohomology(classifying_tower(), p, 1, 12);
    CHECK(h0.group == FinAbGroup::cyclic(p));
    CHECK(h1.group == FinAbGroup::cyclic(p));
    CHECK(h1.stable());
  }
  // only Z/2 cohomology of the first element survives before 2 appears
  CHECK(pro_cohomology(classifying_tower(), 2, 1, 1).group.is_trivial());
}

TEST_CASE("Morel agreement for the circle") {
  const CompletionTower c = circle_completion();
  for (long long p : {2, 3}) {
    const MorelVerdict v = morel_equiv_check(c.map, p, 1, 12);
    CHECK(v.equivalent);
    REQUIRE(v.degrees.size() == 2);
    for (const auto& d : v.degrees) {
      CHECK(d.bijective);
      CHECK(d.source == d.target);
    }
  }
}

TEST_CASE("two routes to [{B Z/n}, B Z/m]") {
  const auto tower = classifying_tower();
  for (int m : {2, 3}) {
    const TauSSet bm = b_group(FinGroup::cyclic(m));
    const Elem depth = 2 * m;
    const auto classes = pro_hom_to_simple(up_to_homotopy(tower), bm, depth);
    const auto colim = colim_pi0_mapping(tower, bm, depth);
    CHECK(classes.count() == m);
    CHECK(colim.count() == static_cast<std::size_t>(m));
  }
}

TEST_CASE("quick invariants are labelled partial") {
  const QuickReport q = quick_invariants(classifying_tower(), 6, {2});
  CHECK_FALSE(q.entries.empty());
  CHECK(q.scope.find("partial") == 0);
}

TEST_CASE("cyclic quotient maps") {
  const TauSSet b4 = b_group(FinGroup::cyclic(4)), b2 = b_group(FinGroup::cyclic(2));
  const SimplicialMap q = cyclic_quotient_map(b4, b2, 4, 2);
  CHECK(q(1, 1) == 1);
  CHECK(q(1, 2) == 0);
  CHECK(q(1, 3) == 1);
  CHECK_THROWS(cyclic_quotient_map(b4, b_group(FinGroup::cyclic(3)), 4, 3));
}
