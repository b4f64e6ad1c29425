#include <doctest.h>

#include <filesystem>
#include <set>
#include <thread>

#include "procat/examples.hpp"
#include "procat/io.hpp"
#include "procat/workspace.hpp"

using namespace procat;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("procat-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("sset JSON round trip") {
  for (const auto& e : coskeletal_examples()) {
    const Json j = sset_to_json(e.sset);
    const TauSSet back = sset_from_json(j);
    CHECK_MESSAGE(same_structure(back, e.sset), e.name);
    CHECK(sset_hash(back) == sset_hash(e.sset));
    CHECK(canonical(sset_to_json(back)) == canonical(j));
  }
  CHECK(sset_hash(b_group(FinGroup::cyclic(2))) != sset_hash(b_group(FinGroup::cyclic(3))));
}

TEST_CASE("malformed simplicial sets are rejected") {
  Json j = sset_to_json(b_group(FinGroup::cyclic(2)));
  SUBCASE("face out of range") {
    j["levels"][1]["faces"][1][0] = 7;
    CHECK_THROWS_AS(sset_from_json(j), SchemaError);
  }
  SUBCASE("simplicial identity broken") {
    // simplex 1 of level 2 is s_1 of the generator, so d_0 must be s_0 d_0 = 0
    j["levels"][2]["faces"][1][0] = 1;
    CHECK_THROWS_AS(sset_from_json(j), InvariantViolation);
  }
  SUBCASE("wrong schema") {
    j["schema"] = "fincat.v1";
    CHECK_THROWS_AS(sset_from_json(j), SchemaError);
  }
  SUBCASE("face list of the wrong length") {
    j["levels"][1]["faces"][0] = Json::array({0});
    CHECK_THROWS_AS(sset_from_json(j), SchemaError);
  }
}

TEST_CASE("sset builders by label") {
  const Json j = {{"schema", "sset.v1"}, {"builder", "K(Z/2,2)"}};
  CHECK(sset_from_json(j).count(3) == 8);
  CHECK_THROWS(sset_from_json(Json{{"schema", "sset.v1"}, {"builder", "Q(Z)"}}));
}

TEST_CASE("fincat and wfc JSON round trip") {
  for (const auto& f : wfc_fixtures()) {
    const WfcInput in = wfc_from_json(wfc_to_json(f.category, f.w, f.fib));
    CHECK(in.category.content_hash() == f.category.content_hash());
    CHECK(in.w == f.w);
    CHECK(in.fib == f.fib);
  }
  const FinCategory pp = FinCategory::parallel_pair();
  CHECK(fincat_from_json(fincat_to_json(pp)).content_hash() == pp.content_hash());
  Json bad = fincat_to_json(pp);
  bad["morphisms"][2]["cod"] = "nowhere";
  CHECK_THROWS_AS(fincat_from_json(bad), SchemaError);
}

TEST_CASE("poset JSON round trip") {
  const FinPoset p = FinPoset::divisors(12);
  const FinPoset q = poset_from_json(poset_to_json(p));
  CHECK(q.elements == p.elements);
  CHECK(q.leq == p.leq);
  CHECK(effposet_from_spec("finite:" + poset_to_json(p).dump()).fragment(20).size() == 6);
}

TEST_CASE("knil certificate JSON round trip keeps the verdict") {
  const PostnikovZ4 z = postnikov_z4();
  const Json j = knil_to_json(z.certificate, "Kp:2");
  const KNilCertificate back = knil_from_json(j);
  CHECK(back.nodes.size() == z.certificate.nodes.size());
  CHECK(knil_check(back, KNilBasis::kp(2)).accepted);
  CHECK_FALSE(knil_check(knil_from_json(knil_to_json(z.corrupted)), KNilBasis::kp(2)).accepted);
}

TEST_CASE("pro input by family") {
  const Json j = {{"schema", "pro.v1"}, {"index", "divisibility"}, {"family", "B(Z/n)"}, {"depth", 6}};
  const ProInput in = pro_from_json(j);
  CHECK(in.depth == 6);
  CHECK(in.object.value(3).count(1) == 4);
  CHECK_THROWS_AS(pro_from_json(Json{{"schema", "pro.v1"}, {"index", "omega"}, {"family", "B(Z/n)"}, {"depth", 3}}),
                  SchemaError);
}

TEST_CASE("report skeleton") {
  Report r;
  r.command = "check x";
  r.add("a", true);
  CHECK(r.pass());
  r.add("b", false, {{"why", "no"}});
  CHECK_FALSE(r.pass());
  const Json j = r.to_json();
  CHECK(j["schema"] == "report.v1");
  CHECK(j["verdicts"].size() == 2);
  CHECK(j["pass"] == false);
}

TEST_CASE("workspace is content addressed and append-only") {
  Workspace ws(fresh_dir("ws"));
  const Json a = sset_to_json(b_group(FinGroup::cyclic(2)));
  const std::string id = ws.put("sset", a);
  CHECK(id.rfind("sset-", 0) == 0);
  CHECK(ws.put("sset", a) == id);
  CHECK(ws.contains(id));
  CHECK(canonical(ws.get(id)) == canonical(a));
  CHECK(ws.ids().size() == 1);
  CHECK(canonical(load_input(ws, id)) == canonical(a));
  CHECK_THROWS(ws.get("sset-0000"));
  CHECK_THROWS_AS(ws.get("../escape"), PreconditionError);
  std::filesystem::remove_all(ws.dir());
}

TEST_CASE("concurrent writers of the same object agree") {
  Workspace ws(fresh_dir("race"));
  const Json a = sset_to_json(k_abelian(FinAbGroup::cyclic(2), 2).sset);
  std::vector<std::string> ids(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { ids[t] = Workspace(ws.dir()).put("sset", a); });
  for (auto& t : threads) t.join();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == 1);
  CHECK(ws.ids().size() == 1);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(ws.dir())) files += e.is_regular_file();
  CHECK(files == 1);  // no temp files left behind
  std::filesystem::remove_all(ws.dir());
}
