#include <doctest.h>

#include <random>

#include "procat/chain.hpp"
#include "procat/examples.hpp"
#include "procat/fincat.hpp"
#include "procat/wfc.hpp"

using namespace procat;

namespace {

// Composable chains of length k counted directly from dom/cod.
long long count_chains(const FinCategory& c, int k) {
  if (k == 0) return c.num_objects();
  std::vector<long long> ending(c.num_objects(), 0);
  for (int f = 0; f < c.num_morphisms(); ++f) ++ending[c.cod[f]];
  for (int step = 1; step < k; ++step) {
    std::vector<long long> next(c.num_objects(), 0);
    for (int f = 0; f < c.num_morphisms(); ++f) next[c.cod[f]] += ending[c.dom[f]];
    ending = next;
  }
  long long s = 0;
  for (long long e : ending) s += e;
  return s;
}

FinCategory square() {
  return FinPoset::from_relation({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).as_category();
}

}  // namespace

TEST_CASE("category builders validate") {
  CHECK_NOTHROW(FinCategory::terminal().validate());
  CHECK_NOTHROW(FinCategory::parallel_pair().validate());
  CHECK_NOTHROW(FinCategory::idempotent().validate());
  CHECK_NOTHROW(FinCategory::from_group(FinGroup::symmetric3()).validate());
  CHECK_NOTHROW(FinCategory::product(square(), FinCategory::parallel_pair()).validate());
  CHECK_NOTHROW(FinCategory::opposite(square()).validate());
  CHECK(FinCategory::left_cone(FinCategory::discrete({"a", "b"})).num_objects() == 3);
  CHECK(FinCategory::product(square(), FinCategory::parallel_pair()).num_morphisms() == 9 * 4);
}

TEST_CASE("broken composition tables are rejected") {
  FinCategory c = FinCategory::idempotent();
  const int e = c.morphism_index("e");
  c.comp[static_cast<std::size_t>(e) * c.num_morphisms() + e] = c.identity[0];  // e∘e = 1
  CHECK_NOTHROW(c.validate());  // still a category: Z/2
  FinCategory d = FinCategory::parallel_pair();
  d.cod[d.morphism_index("alpha")] = d.object_index("x");
  CHECK_THROWS_AS(d.validate(), InvariantViolation);
  CHECK_THROWS_AS(d.object_index("nope"), PreconditionError);
  CHECK_THROWS(FinCategory::build({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}}, {}));
}

TEST_CASE("nerve level counts are composable chains") {
  const std::vector<FinCategory> cs = {FinCategory::parallel_pair(), FinCategory::idempotent(), square(),
                                       FinCategory::from_group(FinGroup::cyclic(3))};
  for (const auto& c : cs) {
    const TauSSet n = nerve(c, 4);
    for (int k = 0; k <= 4; ++k) CHECK(n.count(k) == count_chains(c, k));
    CHECK_NOTHROW(n.check_identities(4));
  }
}

TEST_CASE("homology of nerves") {
  // parallel pair: a circle
  const auto h = homology(nerve(FinCategory::parallel_pair()), 2);
  CHECK(h[0] == FinAbGroup::free(1));
  CHECK(h[1] == FinAbGroup::free(1));
  CHECK(h[2].is_trivial());
  // a poset with a top is contractible
  const auto hs = homology(nerve(square()), 2);
  CHECK(hs[0] == FinAbGroup::free(1));
  CHECK(hs[1].is_trivial());
}

TEST_CASE("cofiltered check names the failing axiom") {
  CHECK(check_cofiltered(square()).ok);
  CHECK(check_cofiltered(FinCategory::idempotent()).ok);
  const auto pp = check_cofiltered(FinCategory::parallel_pair());
  CHECK_FALSE(pp.ok);
  CHECK(pp.axiom == 3);
  const auto disc = check_cofiltered(FinCategory::discrete({"a", "b"}));
  CHECK_FALSE(disc.ok);
  CHECK(disc.axiom == 2);
  FinCategory empty;
  CHECK(check_cofiltered(empty).axiom == 1);
  CHECK(check_filtered(FinCategory::opposite(square())).ok);
}

TEST_CASE("cone extension over a cofiltered category") {
  const FinCategory i = square();
  const FinFunctor f = FinFunctor::full_inclusion(i, {1, 2});
  const ConeExtension ce = cone_extension(f);
  CHECK(is_cone(f, ce.apex, ce.legs));
  CHECK_NOTHROW(ce.extended.validate());
  const FinFunctor g = FinFunctor::full_inclusion(FinCategory::parallel_pair(), {0, 1});
  CHECK_THROWS_AS(cone_extension(g), PreconditionError);
}

TEST_CASE("comma categories") {
  const FinCategory i = square();
  const FinFunctor id = FinFunctor::identity(i);
  // arrows run u -> v for u >= v, so the slice over 0 has every object
  for (int d = 0; d < i.num_objects(); ++d) {
    const CommaCategory over = comma_over(id, d);
    CHECK_NOTHROW(over.category.validate());
    CHECK(is_connected(over.category));
  }
  CHECK(comma_over(id, 0).category.num_objects() == 4);
  CHECK(comma_over(id, 3).category.num_objects() == 1);
  CHECK(connected_components(FinCategory::discrete({"a", "b", "c"})) == 3);
}

TEST_CASE("classical cofinality tests on the bundled examples") {
  for (const auto& e : quillen_a_examples()) {
    const auto v = check_coinitial_classical(e.functor);
    CHECK_MESSAGE(v.all, e.name);
    CHECK_MESSAGE(v.certified, e.name);
  }
  for (const auto& e : thomason_examples()) {
    const auto v = check_cofinal_classical(e.functor);
    CHECK_MESSAGE(v.all, e.name);
    CHECK_MESSAGE(v.certified, e.name);
    REQUIRE(e.h.has_value());
    CHECK_NOTHROW(e.h->validate(e.functor.target));
  }
  // the top maps to everything, the bottom alone does not
  CHECK(check_coinitial_classical(FinFunctor::full_inclusion(square(), {3})).all);
  CHECK_FALSE(check_coinitial_classical(FinFunctor::full_inclusion(square(), {0})).all);
}

TEST_CASE("Quillen A and Thomason homology tables agree") {
  for (const auto& e : quillen_a_examples()) CHECK_MESSAGE(quillen_a_compare(e).agree(), e.name);
  for (const auto& e : thomason_examples()) CHECK_MESSAGE(thomason_compare(e).agree(), e.name);
}

TEST_CASE("Grothendieck construction sizes") {
  const FinCategory i = square();
  const SetFunctor h = SetFunctor::constant(i, 2);
  const Grothendieck g = grothendieck_set(i, h);
  CHECK(g.category.num_objects() == 8);
  CHECK(g.category.num_morphisms() == 2 * i.num_morphisms());
  CHECK_NOTHROW(g.category.validate());
  // every object has exactly one arrow to 0, so ∫ Hom(-, 0) is the square again
  const auto hr = homology(nerve(grothendieck_set(i, SetFunctor::representable_contra(i, 0)).category), 2);
  CHECK(hr[0] == FinAbGroup::free(1));
  CHECK(hr[1].is_trivial());
}

TEST_CASE("Reedy degree is the longest descending chain") {
  const FinPoset d = FinPoset::divisors(12);
  const auto deg = reedy_degree(d);
  for (int a = 0; a < d.size(); ++a) {
    // longest chain of divisors below, computed by counting prime factors
    long long v = std::stoll(d.elements[a]);
    int primes = 0;
    for (long long p = 2; v > 1; ++p)
      while (v % p == 0) v /= p, ++primes;
    CHECK(deg[a] == primes);
  }
}

TEST_CASE("wfc fixtures name their axiom") {
  for (const auto& f : wfc_fixtures()) {
    const WfcVerdict v = wfc_check(f.category, f.w, f.fib);
    if (f.expected_axiom < 0) {
      CHECK_MESSAGE(v.ok, f.name);
    } else {
      CHECK_MESSAGE(!v.ok, f.name);
      CHECK_MESSAGE(v.axiom == f.expected_axiom, f.name);
      CHECK(v.axiom_name == wfc_axiom_name(f.expected_axiom));
    }
  }
}

TEST_CASE("limit helpers on a lattice") {
  const FinCategory c = square();
  // arrows u -> v for u >= v: 0 is terminal, 1 is initial
  CHECK(is_terminal(c, c.object_index("0")));
  CHECK_FALSE(is_terminal(c, c.object_index("1")));
  CHECK_THROWS(class_from_names(c, {"no such arrow"}));
  const MorphismClass iso = isomorphisms(c);
  CHECK(std::count(iso.begin(), iso.end(), 1) == 4);
}
