#include <doctest.h>

#include <numeric>
#include <random>

#include "procat/chain.hpp"
#include "procat/eilmac.hpp"
#include "procat/fincat.hpp"
#include "procat/group.hpp"

using namespace procat;

namespace {

// Determinant by cofactor expansion; fine for the 3x3 minors used below.
long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det(sub);
  }
  return s;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors: d_1 * ... * d_k of the Smith form.
long long determinantal_divisor(const IntMat& a, int k) {
  std::vector<std::vector<int>> rs, cs;
  std::vector<int> cur;
  choose(a.rows, k, 0, cur, rs);
  choose(a.cols, k, 0, cur, cs);
  long long g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
      g = gcd_ll(g, det(m));
    }
  return g;
}

}  // namespace

TEST_CASE("FinAbGroup normalizes cyclic orders into invariant factors") {
  CHECK(FinAbGroup::from_cyclic_orders({2, 3}).invariant_factors() == std::vector<long long>{6});
  CHECK(FinAbGroup::from_cyclic_orders({2, 4, 1}).invariant_factors() == std::vector<long long>{2, 4});
  CHECK(FinAbGroup::from_cyclic_orders({4, 6}).invariant_factors() == std::vector<long long>{2, 12});
  const FinAbGroup z = FinAbGroup::from_cyclic_orders({0, 2});
  CHECK(z.free_rank() == 1);
  CHECK_FALSE(z.is_finite());
  CHECK_THROWS_AS(z.order(), std::exception);
  CHECK(FinAbGroup::cyclic(1).is_trivial());
}

TEST_CASE("FinAbGroup element arithmetic") {
  const FinAbGroup g = FinAbGroup::from_cyclic_orders({2, 4});
  CHECK(g.order() == 8);
  for (long long x = 0; x < g.order(); ++x) {
    CHECK(g.encode(g.decode(x)) == x);
    CHECK(g.add(x, g.neg(x)) == 0);
    long long y = 0;
    for (long long k = 0; k < g.element_order(x); ++k) y = g.add(y, x);
    CHECK(y == 0);
  }
}

TEST_CASE("Smith normal form matches determinantal divisors on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 4), val(-6, 6);
  for (int t = 0; t < 60; ++t) {
    IntMat a(dim(rng), dim(rng));
    for (auto& x : a.a) x = val(rng);
    const Snf s = smith_normal_form(a, true);
    long long prod = 1;
    const int top = std::min({a.rows, a.cols, 3});
    for (int k = 1; k <= top; ++k) {
      const long long dk = determinantal_divisor(a, k);
      if (k <= s.rank) {
        prod *= to_ll(s.diag[k - 1]);
        CHECK(dk == prod);
      } else {
        CHECK(dk == 0);
      }
    }
    for (int k = 1; k < s.rank; ++k) CHECK(s.diag[k] % s.diag[k - 1] == 0);
    // U A V = D
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) {
        BigInt e = 0;
        for (int p = 0; p < a.rows; ++p)
          for (int q = 0; q < a.cols; ++q) e += s.U(i, p) * a(p, q) * s.V(q, j);
        const BigInt want = (i == j && i < s.rank) ? s.diag[i] : BigInt(0);
        CHECK(e == want);
      }
  }
}

TEST_CASE("Subquotient of the boundary of a triangle") {
  // C_1 = Z^3 (edges 01, 02, 12), C_0 = Z^3: H_1 = Z generated by 01 - 02 + 12.
  IntMat d1(3, 3);
  d1(0, 0) = -1, d1(1, 0) = 1;
  d1(0, 1) = -1, d1(2, 1) = 1;
  d1(1, 2) = -1, d1(2, 2) = 1;
  const Subquotient q = Subquotient::compute(d1, IntMat(3, 0), 3, 0);
  CHECK(q.group() == FinAbGroup::free(1));
  const auto c = q.coordinates(std::vector<long long>{2, -2, 2});
  REQUIRE(c.size() == 1);
  CHECK(abs(c[0]) == 2);
  CHECK_THROWS(q.coordinates(std::vector<long long>{1, 0, 0}));
}

TEST_CASE("groups: axioms and homomorphism counts") {
  const FinGroup s3 = FinGroup::symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK_NOTHROW(s3.check_axioms());
  // |Hom(Z/n, Z/m)| = gcd(n, m), counted here by n*a = 0 mod m.
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      int expect = 0;
      for (int a = 0; a < m; ++a) expect += (n * a) % m == 0;
      CHECK(all_homomorphisms(FinGroup::cyclic(n), FinGroup::cyclic(m), 1000).size() ==
            static_cast<std::size_t>(expect));
    }
  // Hom(S3, Z/2) has the trivial map and the sign.
  CHECK(all_homomorphisms(s3, FinGroup::cyclic(2), 1000).size() == 2);
  CHECK(abelian_type(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3))) == FinAbGroup::cyclic(6));
  CHECK(abelian_type_from_orders({1, 2, 2, 2}) == FinAbGroup::from_cyclic_orders({2, 2}));
  CHECK(abelian_type_from_orders({1, 2, 4, 4}) == FinAbGroup::cyclic(4));
}

TEST_CASE("group tables that break an axiom are rejected") {
  // 0 is the identity but 1*1 = 1 makes 1 idempotent without inverse.
  CHECK_THROWS_AS(FinGroup::from_table({0, 1, 1, 1}, 2), InvariantViolation);
  GModule m = GModule::inversion(FinAbGroup::cyclic(3));
  CHECK_NOTHROW(m.check());
  m.act[0] = 1;  // identity no longer acts trivially
  CHECK_THROWS_AS(m.check(), InvariantViolation);
}

TEST_CASE("homology of classifying spaces") {
  // H_*(BZ/n; Z) = Z, Z/n, 0, Z/n, ...
  for (int n : {2, 3, 4}) {
    const auto h = homology(b_group(FinGroup::cyclic(n), 4), 3);
    CHECK(h[0] == FinAbGroup::free(1));
    CHECK(h[1] == FinAbGroup::cyclic(n));
    CHECK(h[2].is_trivial());
    CHECK(h[3] == FinAbGroup::cyclic(n));
  }
  // H_1(BS3) = Z/2, the abelianization.
  CHECK(homology(b_group(FinGroup::symmetric3(), 3), 2)[1] == FinAbGroup::cyclic(2));
}

TEST_CASE("mod p cohomology agrees with the universal coefficient prediction") {
  const std::vector<TauSSet> spaces = {b_group(FinGroup::cyclic(2), 4), b_group(FinGroup::cyclic(3), 4),
                                       b_group(FinGroup::cyclic(6), 4), nerve(FinCategory::parallel_pair())};
  for (const auto& x : spaces)
    for (long long p : {2, 3}) {
      const auto hz = homology(x, 3);
      const auto hp = cohomology(x, 2, p);
      const auto hpz = homology(x, 2, p);
      for (int k = 0; k <= 2; ++k) {
        const FinAbGroup prev = k == 0 ? FinAbGroup() : hz[k - 1];
        CHECK(hp[k] == uct_cohomology(hz[k], prev, p));
        CHECK(hpz[k] == uct_homology(hz[k], prev, p));
      }
    }
}

TEST_CASE("normalized chains square to zero") {
  CHECK_NOTHROW(normalized_chains(k_abelian(FinAbGroup::cyclic(2), 2).sset, 3).check());
  const auto c = normalized_chains(b_group(FinGroup::cyclic(2), 3), 3);
  CHECK_NOTHROW(c.check());
  // perturbing one entry of ∂_2 leaves ∂_1∂_2 nonzero (edges have nonzero boundary in Δ^2)
  ChainComplex bad = normalized_chains(standard_simplex(2, 2).sset, 2);
  bad.boundary[2](0, 0) += 1;
  CHECK_THROWS_AS(bad.check(), InvariantViolation);
}

TEST_CASE("cokernel of a presented map") {
  IntMat m(1, 1);
  m(0, 0) = 2;
  CHECK(cokernel({0}, m) == FinAbGroup::cyclic(2));
  CHECK(cokernel({6}, m) == FinAbGroup::cyclic(2));
  m(0, 0) = 4;
  CHECK(cokernel({6}, m) == FinAbGroup::cyclic(2));
}
