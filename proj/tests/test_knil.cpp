#include <doctest.h>

#include "procat/examples.hpp"
#include "procat/knil.hpp"
#include "procat/search.hpp"

using namespace procat;

TEST_CASE("basis membership") {
  const KNilBasis kp2 = KNilBasis::kp(2), kpi = KNilBasis::kpi();
  CHECK(kp2.admits("point"));
  CHECK(kp2.admits("K(Z/2,2)"));
  CHECK_FALSE(kp2.admits("L(Z/2,2)"));  // contractible, certified through a weak equivalence
  CHECK_FALSE(kp2.admits("K(Z/3,2)"));
  CHECK_FALSE(kp2.admits("B(S3)"));
  CHECK(kpi.admits("B(S3)"));
  CHECK(kpi.admits("K(S,0):3"));
  CHECK(KNilBasis::parse("Kp:3").prime == 3);
  CHECK_THROWS(KNilBasis::parse("Kp:4"));
  CHECK(kpi.element("K(S,0):3").count(0) == 3);
  CHECK(find_isomorphism(kpi.element("B(Z/3)"), b_group(FinGroup::cyclic(3))).has_value());
}

TEST_CASE("single-leaf certificates") {
  KNilCertificate c;
  KNilNode n;
  n.id = "root";
  n.kind = KNilKind::Leaf;
  n.label = "K(Z/2,2)";
  n.object = KNilBasis::kpi().element("K(Z/2,2)");
  c.nodes.push_back(n);
  CHECK(knil_check(c, KNilBasis::kp(2)).accepted);
  const KNilVerdict v = knil_check(c, KNilBasis::kp(3));
  CHECK_FALSE(v.accepted);
  CHECK(v.failing_node == "root");
}

TEST_CASE("K(Z/4,1) certificate and its negatives") {
  const PostnikovZ4 z = postnikov_z4();
  CHECK(z.stage.ok);
  CHECK_FALSE(z.zero_stage.ok);
  const KNilBasis kp2 = KNilBasis::kp(2);
  const KNilVerdict good = knil_check(z.certificate, kp2);
  CHECK(good.accepted);
  CHECK_FALSE(good.retract_only);
  CHECK(good.log.size() == z.certificate.nodes.size());
  // serial and parallel node checks report the same thing
  const KNilVerdict serial = knil_check(z.certificate, kp2, Exec::Serial);
  CHECK(serial.log == good.log);

  const KNilVerdict bad = knil_check(z.corrupted, kp2);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.condition.find("horn") != std::string::npos);
  const KNilVerdict zero = knil_check(z.zero, kp2);
  CHECK_FALSE(zero.accepted);
  CHECK_FALSE(zero.failing_node.empty());
  // the certificate is only valid over the prime 2
  CHECK_FALSE(knil_check(z.certificate, KNilBasis::kp(3)).accepted);
}

TEST_CASE("classifying map search finds the extension class") {
  const PostnikovZ4 z = postnikov_z4();
  // π_1 of the pullback along the found map is Z/4, along zero Z/2 + Z/2
  CHECK(z.stage.pi1_pullback == "Z/4");
  CHECK(z.zero_stage.pi1_pullback == "Z/2 + Z/2");
}

TEST_CASE("L -> K fibrations") {
  const LToK lk = l_to_k_fibration(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(2)), 1);
  CHECK(is_kan_fibration(lk.projection).ok);
  CHECK(is_kan(lk.l).kan);
  CHECK(same_structure(lk.k, lk.k));
  CHECK_FALSE(same_structure(lk.k, lk.l));
}

TEST_CASE("pi1 via minimal models") {
  CHECK(pi1_via_minimal(e_group(FinGroup::cyclic(3))).group.order() == 1);
  const HomotopyGroup g = pi1_via_minimal(product(b_group(FinGroup::cyclic(2)), e_group(FinGroup::cyclic(2))).object);
  REQUIRE(g.abelian.has_value());
  CHECK(*g.abelian == FinAbGroup::cyclic(2));
}
