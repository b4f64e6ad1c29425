#include <doctest.h>

#include "procat/eilmac.hpp"
#include "procat/fincat.hpp"
#include "procat/homotopy.hpp"
#include "procat/knil.hpp"
#include "procat/search.hpp"

using namespace procat;

TEST_CASE("pi0 counts components") {
  CHECK(pi0(discrete(3)) == 3);
  CHECK(pi0(b_group(FinGroup::cyclic(4))) == 1);
  const Product p = product(discrete(2), discrete(3));
  CHECK(pi0(p.object) == 6);
  CHECK(pi0(nerve(FinCategory::discrete({"a", "b"}))) == 2);
}

TEST_CASE("fundamental groups of classifying spaces") {
  for (int k : {2, 3, 4, 5, 6}) {
    const HomotopyGroup g = homotopy_group(b_group(FinGroup::cyclic(k)), 0, 1);
    REQUIRE(g.abelian.has_value());
    CHECK(*g.abelian == FinAbGroup::cyclic(k));
    // cyclic: some element has order k
    int top = 0;
    for (int e = 0; e < g.group.order(); ++e) top = std::max(top, g.group.element_order(e));
    CHECK(top == k);
  }
  const HomotopyGroup s3 = homotopy_group(b_group(FinGroup::symmetric3()), 0, 1);
  CHECK(s3.group.order() == 6);
  CHECK_FALSE(s3.group.is_abelian());
}

TEST_CASE("higher homotopy of K(Z/m, 2)") {
  for (int m : {2, 3}) {
    const TauSSet k2 = k_abelian(FinAbGroup::cyclic(m), 2).sset;
    CHECK(is_kan(k2).kan);
    CHECK(is_minimal(k2).minimal);
    CHECK(homotopy_group(k2, 0, 1).group.order() == 1);
    const HomotopyGroup p2 = homotopy_group(k2, 0, 2);
    REQUIRE(p2.abelian.has_value());
    CHECK(*p2.abelian == FinAbGroup::cyclic(m));
  }
}

TEST_CASE("homotopy_group refuses non-minimal input") {
  const TauSSet eg = e_group(FinGroup::cyclic(2));
  CHECK(is_kan(eg).kan);
  CHECK_FALSE(is_minimal(eg).minimal);
  CHECK_THROWS_AS(homotopy_group(eg, 0, 1), PreconditionError);
}

TEST_CASE("minimal models") {
  // EG is contractible: its minimal model is a point.
  const MinimalModel m = minimalize(e_group(FinGroup::cyclic(3)));
  CHECK(m.sub.object.count(0) == 1);
  CHECK(m.sub.object.count(1) == 1);
  const auto r_i = SimplicialMap::compose(m.retraction, m.sub.inclusion);
  CHECK(maps_equal(r_i, SimplicialMap::identity(m.sub.object)));
  // B(Z/2) x Δ^1 retracts onto a copy of B(Z/2).
  const Product p = product(b_group(FinGroup::cyclic(2)), e_group(FinGroup::cyclic(2)));
  const MinimalModel mp = minimalize(p.object);
  CHECK(is_minimal(mp.sub.object).minimal);
  CHECK(find_isomorphism(mp.sub.object, b_group(FinGroup::cyclic(2))).has_value());
}

TEST_CASE("prism and simplex homotopy agree on minimal Kan complexes") {
  const std::vector<TauSSet> xs = {b_group(FinGroup::cyclic(3)), b_group(FinGroup::symmetric3()),
                                   e_group(FinGroup::cyclic(2)), k_abelian(FinAbGroup::cyclic(2), 2).sset};
  for (const auto& x : xs)
    for (int m = 0; m <= 1; ++m)
      for (int a = 0; a < x.count(m); ++a)
        for (int b = 0; b < x.count(m); ++b) {
          if (m > 0 && x.boundary(m, a) != x.boundary(m, b)) continue;
          CHECK(homotopic_rel_boundary(x, m, a, b, RelHomotopy::Prism) ==
                homotopic_rel_boundary(x, m, a, b, RelHomotopy::Simplex));
        }
}

TEST_CASE("pi0 of mapping spaces between classifying spaces") {
  // [BZ/n, BZ/m] = Hom(Z/n, Z/m) for abelian targets: gcd(n, m) classes.
  for (int n = 1; n <= 4; ++n)
    for (int m = 2; m <= 3; ++m)
      CHECK(pi0_mapping_space(b_group(FinGroup::cyclic(n)), b_group(FinGroup::cyclic(m))) == gcd_ll(n, m));
  // conjugate homomorphisms Z/2 -> S3 are homotopic: two classes
  CHECK(pi0_mapping_space(b_group(FinGroup::cyclic(2)), b_group(FinGroup::symmetric3())) == 2);
}

TEST_CASE("homotopic maps") {
  const TauSSet b2 = b_group(FinGroup::cyclic(2));
  const TauSSet s3 = b_group(FinGroup::symmetric3());
  const auto maps = all_maps(b2, s3, 100);
  REQUIRE(maps.size() == 4);  // trivial plus three transpositions
  int classes_with_trivial = 0;
  for (const auto& f : maps) classes_with_trivial += homotopic_maps(f, maps[0]);
  CHECK(classes_with_trivial == 1);
  for (const auto& f : maps)
    for (const auto& g : maps)
      if (!maps_equal(f, maps[0]) && !maps_equal(g, maps[0])) CHECK(homotopic_maps(f, g));
}

TEST_CASE("path object evaluations are fibrations for Kan targets") {
  const PathObject p = path_object(b_group(FinGroup::cyclic(2)));
  CHECK(is_kan_fibration(p.ev0).ok);
  CHECK(is_kan_fibration(p.ev1).ok);
  CHECK(maps_equal(SimplicialMap::compose(p.ev0, p.constant), SimplicialMap::identity(p.ev0.target())));
}

TEST_CASE("Dold-Kan level counts") {
  // |Γ(A[n])_m| = |A|^C(m, n)
  for (int a : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      const SimplicialGroup g = dold_kan_gamma(FinChainComplex::concentrated(FinAbGroup::cyclic(a), n), n + 2, n + 1);
      CHECK_NOTHROW(g.check());
      for (int m = 0; m <= n + 2; ++m) {
        long long expect = 1;
        for (long long i = 0; i < binomial(m, n); ++i) expect *= a;
        CHECK(g.sset.count(m) == expect);
      }
    }
  CHECK(k_abelian(FinAbGroup::cyclic(2), 2).sset.count(3) == 8);
}

TEST_CASE("normalized complex of Γ recovers the chain complex") {
  const FinAbGroup a = FinAbGroup::cyclic(3);
  const SimplicialGroup g = dold_kan_gamma(FinChainComplex::concentrated(a, 2), 4, 3);
  const auto n = normalized_complex(g, 3);
  CHECK(n[0].type.is_trivial());
  CHECK(n[1].type.is_trivial());
  CHECK(n[2].type == a);
  CHECK(n[3].type.is_trivial());
}

TEST_CASE("surjections [m] ->> [k]") {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) CHECK(surjections(m, k).size() == static_cast<std::size_t>(binomial(m, k)));
}

TEST_CASE("W constructions") {
  const SimplicialGroup k1 = k_abelian(FinAbGroup::cyclic(2), 1, 4);
  const WConstruction w = w_constructions(k1, 3, 4);
  CHECK(is_kan(w.w).kan);
  CHECK(is_kan_fibration(w.projection).ok);
  // W K(Z/2,1) is contractible: one vertex, and π_1 of the minimal model is trivial.
  CHECK(w.w.count(0) == 1);
  const MinimalModel m = minimalize(w.w);
  CHECK(m.sub.object.count(1) == 1);
  CHECK(m.sub.object.count(2) == 1);
  // W̄ K(Z/2,1) ≃ K(Z/2,2)
  CHECK(find_isomorphism(minimalize(w.wbar).sub.object, k_abelian(FinAbGroup::cyclic(2), 2).sset).has_value());
}

TEST_CASE("homotopy quotient of a trivial action") {
  const FinGroup z2 = FinGroup::cyclic(2);
  const TauSSet q = homotopy_quotient(GAction::trivial(z2, point(), 2), 2, 3);
  CHECK(find_isomorphism(q, b_group(z2)).has_value());
}
