#include <doctest.h>

#include <random>

#include "procat/eilmac.hpp"
#include "procat/fincat.hpp"
#include "procat/homotopy.hpp"
#include "procat/kernels.hpp"
#include "procat/search.hpp"

using namespace procat;

namespace {

// Nondecreasing sequences of length k+1 in {0..m}, by brute force.
int count_sequences(int m, int k) {
  int c = 0;
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i <= k; ++i) t *= m + 1;
    return t;
  }();
  for (long long code = 0; code < total; ++code) {
    const auto v = decode_uniform(code, m + 1, k + 1);
    bool ok = true;
    for (int i = 0; i + 1 <= k; ++i) ok = ok && v[i] <= v[i + 1];
    c += ok;
  }
  return c;
}

}  // namespace

TEST_CASE("standard simplex level counts") {
  for (int m = 0; m <= 3; ++m) {
    const StdSimplex d = standard_simplex(m, 4);
    for (int k = 0; k <= 4; ++k) CHECK(d.sset.count(k) == count_sequences(m, k));
    CHECK(d.sset.num_nondegenerate(m) == 1);
    CHECK(d.sset.num_nondegenerate(m + 1) == 0);
    CHECK_NOTHROW(d.sset.check_identities(4));
  }
}

TEST_CASE("simplicial identities are validated on construction") {
  Truncated t = standard_simplex(1, 1).sset.truncate(1);
  // swap the faces of the nondegenerate edge into an inconsistent d_0 s_0
  const StdSimplex d1 = standard_simplex(1, 1);
  const int s0v0 = d1.sset.s(0, 0, 0);
  t[1].faces[static_cast<std::size_t>(s0v0) * 2] = 1;
  CHECK_THROWS_AS(TauSSet(t, 1), InvariantViolation);
}

TEST_CASE("lazy levels above the coskeletal level are boundary families") {
  const TauSSet bz3 = b_group(FinGroup::cyclic(3));
  // (BG)_k = G^k, computed lazily well past the stored levels.
  int expect = 1;
  for (int k = 0; k <= 5; ++k, expect *= 3) CHECK(bz3.count(k) == expect);
  CHECK_NOTHROW(bz3.check_identities(5));
}

TEST_CASE("coskeleta of discrete sets") {
  for (int s = 1; s <= 3; ++s) {
    const TauSSet c = coskeleton(Truncated{Level{s, {}, {}}}, 0);
    long long expect = s;
    for (int m = 0; m <= 4; ++m, expect *= s) CHECK(c.count(m) == expect);
  }
  CHECK(discrete(3).count(2) == 3);
}

TEST_CASE("product and pullback level counts") {
  const TauSSet a = b_group(FinGroup::cyclic(2)), b = standard_simplex(1, 3).sset;
  const Product p = product(a, b);
  for (int k = 0; k <= 3; ++k) CHECK(p.object.count(k) == a.count(k) * b.count(k));
  CHECK(is_isomorphism(SimplicialMap::compose(p.pr1, pair_map(p, SimplicialMap::identity(a),
                                                                 SimplicialMap::constant(a, b, 0)))));
  // Pullback over a point is the product.
  const TauSSet pt = point();
  const Pullback q = pullback(SimplicialMap::constant(a, pt, 0), SimplicialMap::constant(b, pt, 0));
  for (int k = 0; k <= 3; ++k) CHECK(q.object.count(k) == a.count(k) * b.count(k));
}

TEST_CASE("Eilenberg-Zilber decomposition round trips") {
  const TauSSet x = b_group(FinGroup::symmetric3());
  for (int k = 0; k <= 3; ++k)
    for (int s = 0; s < x.count(k); ++s) {
      const auto ez = x.decompose(k, s);
      CHECK_FALSE(x.is_degenerate(ez.dim, ez.simplex));
      CHECK(x.apply_degeneracy(ez.dim, ez.simplex, ez.surj) == s);
      CHECK((ez.dim < k) == x.is_degenerate(k, s));
    }
}

TEST_CASE("all maps between small classifying spaces") {
  // Maps BZ/n -> BZ/m are homomorphisms Z/n -> Z/m.
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      CHECK(all_maps(b_group(FinGroup::cyclic(n)), b_group(FinGroup::cyclic(m)), 1000).size() ==
            static_cast<std::size_t>(gcd_ll(n, m)));
  CHECK(find_isomorphism(b_group(FinGroup::cyclic(6)),
                         b_group(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3))))
            .has_value());
  CHECK_FALSE(find_isomorphism(b_group(FinGroup::cyclic(4)),
                               b_group(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2))))
                  .has_value());
}

TEST_CASE("serial and parallel kernels agree") {
  const std::vector<TauSSet> xs = {b_group(FinGroup::symmetric3()), k_abelian(FinAbGroup::cyclic(2), 2).sset,
                                   standard_simplex(2, 3).sset, nerve(FinCategory::parallel_pair())};
  for (const auto& x : xs)
    for (int k = 1; k <= 3; ++k)
      for (int skip = -1; skip <= k; ++skip) {
        CHECK(compatible_families(x, k, skip, Exec::Serial, 10'000'000) ==
              compatible_families(x, k, skip, Exec::Parallel, 10'000'000));
        if (skip < 0) continue;
        const auto a = find_unfillable_horn(x, k, skip, Exec::Serial);
        const auto b = find_unfillable_horn(x, k, skip, Exec::Parallel);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->horn == b->horn);
      }
}

TEST_CASE("Kan verdicts") {
  CHECK(is_kan(b_group(FinGroup::symmetric3())).kan);
  CHECK(is_kan(k_abelian(FinAbGroup::cyclic(3), 2).sset).kan);
  CHECK(is_kan(e_group(FinGroup::cyclic(3))).kan);
  const KanVerdict d1 = is_kan(standard_simplex(1, 3).sset);
  CHECK_FALSE(d1.kan);
  REQUIRE(d1.failure.has_value());
  // The nerve of a non-groupoid is not Kan.
  CHECK_FALSE(is_kan(nerve(FinCategory::parallel_pair())).kan);
  CHECK(is_kan(b_group(FinGroup::cyclic(2)), Exec::Serial).kan == is_kan(b_group(FinGroup::cyclic(2))).kan);
}

TEST_CASE("Kan fibrations") {
  const FinGroup z3 = FinGroup::cyclic(3);
  const TauSSet eg = e_group(z3), bg = b_group(z3);
  const SimplicialMap p = eg_to_bg(z3, eg, bg);
  CHECK(is_kan_fibration(p).ok);
  CHECK(is_principal_covering(z3, p, 3));
  CHECK_FALSE(is_trivial_fibration(p).ok);
  // Δ^1 is not Kan, so Δ^1 -> pt fails horn lifting.
  const TauSSet d1 = standard_simplex(1, 3).sset;
  CHECK_FALSE(is_kan_fibration(SimplicialMap::constant(d1, point(), 0)).ok);
  CHECK(is_trivial_fibration(SimplicialMap::constant(e_group(z3), point(), 0)).ok);
}
