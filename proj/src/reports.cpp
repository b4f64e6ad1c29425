#include "procat/reports.hpp"

#include <random>

#include "procat/chain.hpp"
#include "procat/eilmac.hpp"
#include "procat/examples.hpp"
#include "procat/homotopy.hpp"
#include "procat/profinite.hpp"

namespace procat {

Report check_wfc(const WfcInput& in) {
  Report r;
  r.command = "check wfc";
  const WfcVerdict v = wfc_check(in.category, in.w, in.fib);
  r.add("weak fibration category", v.ok,
        v.ok ? Json{{"axioms", "all hold"}}
             : Json{{"axiom", v.axiom_name}, {"message", v.message}, {"witnesses", v.witnesses}});
  return r;
}

Report check_knil(const KNilCertificate& cert, const std::string& basis) {
  Report r;
  r.command = "check knil";
  r.params["basis"] = basis;
  const KNilVerdict v = knil_check(cert, KNilBasis::parse(basis));
  for (std::size_t i = 0; i < cert.nodes.size() && i < v.log.size(); ++i)
    r.add("node " + cert.nodes[i].id, v.log[i].find(" FAILED: ") == std::string::npos, Json{{"log", v.log[i]}});
  Json d{{"retract_only", v.retract_only}};
  if (!v.accepted) {
    d["failing_node"] = v.failing_node;
    d["condition"] = v.condition;
  }
  r.add("certificate", v.accepted, d);
  return r;
}

Report check_special_implies_levelwise(int count, std::uint64_t seed) {
  Report r;
  r.command = "check special-implies-levelwise";
  r.params = {{"random", count}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  int passed = 0, special_pairs = 0;
  Json failures = Json::array();
  for (int t = 0; t < count; ++t) {
    const FinPoset shape = random_poset(rng, 8);
    const auto y = random_finset_diagram(shape, rng, 2);
    const FinSetClass forced = static_cast<FinSetClass>(t % 3);
    const auto f = random_finset_map(y, rng, forced);
    f.validate();
    bool ok = true;
    for (FinSetClass c : {FinSetClass::Surjective, FinSetClass::Injective, FinSetClass::Bijective}) {
      auto pred = [c](const FnMap& m) { return in_finset_class(m, c); };
      const bool special = is_special(f, pred).ok;
      if (c == forced && !special) ok = false;  // generator contract
      if (!special) continue;
      ++special_pairs;
      if (!is_levelwise(f, pred).ok) {
        ok = false;
        failures.push_back({{"tower", t}, {"class", to_string(c)}});
      }
    }
    passed += ok;
  }
  r.add("special implies levelwise", passed == count,
        {{"passed", passed}, {"total", count}, {"special_pairs", special_pairs}, {"failures", failures}});
  return r;
}

Report check_factorization(const std::string& base, int count, std::uint64_t seed) {
  Report r;
  r.command = "check factorization";
  r.params = {{"base", base}, {"random", count}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  int passed = 0;
  Json failures = Json::array();
  auto record = [&](int t, const FactorizationCheck& c) {
    if (c.ok())
      ++passed;
    else
      failures.push_back({{"input", t}, {"failure", c.failure}});
  };
  for (int t = 0; t < count; ++t) {
    if (base == "finset") {
      const auto y = random_finset_diagram(random_poset(rng, 6), rng, 2);
      const auto f = random_finset_map(y, rng, std::nullopt);
      record(t, procat::check_factorization(f, factorize_diagram(f)));
    } else if (base == "kan") {
      const auto f = random_kan_map(rng, 3);
      record(t, procat::check_factorization(f, factorize_diagram(f)));
    } else {
      throw PreconditionError("unknown base " + base + " (finset, kan)");
    }
  }
  r.add("h∘g = f, g levelwise W, h special and levelwise Fib", passed == count,
        {{"passed", passed}, {"total", count}, {"failures", failures}});
  return r;
}

Report check_coskeleta() {
  Report r;
  r.command = "check cosk";
  for (const auto& [name, x] : coskeletal_examples()) {
    const int n = x.cosk_level();
    Truncated t;
    for (int k = 0; k <= n; ++k) t.push_back(x.level(k));
    const TauSSet c1 = coskeleton(t, n);
    Truncated t1;
    for (int k = 0; k <= n; ++k) t1.push_back(c1.level(k));
    const TauSSet c2 = coskeleton(t1, n);
    const bool unit = is_isomorphism(coskeleton_unit(x, n));
    const bool idem = same_structure(c1, c2);
    r.add("cosk_" + std::to_string(n) + " on " + name, unit && idem, {{"unit_iso", unit}, {"idempotent", idem}});
  }
  for (int s = 1; s <= 3; ++s) {
    const TauSSet c = coskeleton(Truncated{Level{s, {}, {}}}, 0);
    Json counts = Json::array();
    bool ok = true;
    long long expect = s;
    for (int m = 0; m <= 4; ++m, expect *= s) {
      counts.push_back(c.count(m));
      ok = ok && c.count(m) == expect;
    }
    r.add("|cosk_0(S)_m| = |S|^(m+1) for |S| = " + std::to_string(s), ok, {{"counts", counts}});
  }
  return r;
}

Report check_sset(const TauSSet& x) {
  Report r;
  r.command = "check sset";
  const KanVerdict k = is_kan(x);
  r.add("Kan", k.kan);
  if (k.kan) r.add("minimal", is_minimal(x).minimal);
  return r;
}

Report example_circle(Elem depth, const std::vector<long long>& primes) {
  Report r;
  r.command = "example circle";
  r.params = {{"depth", depth}, {"primes", primes}};
  const CompletionTower c = circle_completion();
  c.verify(depth);
  const HomologyTower hx = homology_tower(c.map.source, 1), hy = homology_tower(c.tower, 1);
  const auto h1 = pro_h1_map(c.map, hx, hy);
  const AbIsoVerdict iso = pro_ab_iso_check(h1, depth);
  Json body;
  body["schema"] = "profinite.v1";
  body["depth"] = depth;
  body["h1"] = {{"source", hx.groups.value(0).to_string()},
                {"iso", iso.iso},
                {"candidates", iso.candidates},
                {"obstruction", iso.obstruction}};
  r.add("pro-H1 is not an isomorphism", !iso.iso, {{"obstruction", iso.obstruction}});
  Json per_prime = Json::array();
  for (long long p : primes) {
    const MorelVerdict m = morel_equiv_check(c.map, p, 1, depth);
    Json degrees = Json::array();
    for (const auto& d : m.degrees)
      degrees.push_back({{"degree", d.degree},
                         {"source", d.source.to_string()},
                         {"target", d.target.to_string()},
                         {"bijective", d.bijective}});
    Json witnesses = Json::array();
    for (int k = 0; k <= 1; ++k) {
      const ProCohomology pc = pro_cohomology(c.tower, p, k, depth);
      witnesses.push_back({{"degree", k}, {"group", pc.group.to_string()}, {"stability", pc.stability()}});
    }
    per_prime.push_back({{"prime", p}, {"equivalent", m.equivalent}, {"degrees", degrees}, {"witnesses", witnesses}});
    r.add("Morel Z/" + std::to_string(p) + " agreement in degrees 0-1", m.equivalent);
  }
  body["primes"] = per_prime;
  r.data = body;
  return r;
}

Report example_postnikov_z4() {
  Report r;
  r.command = "example postnikov-z4";
  r.params["basis"] = "Kp:2";
  const PostnikovZ4 z = postnikov_z4();
  const KNilBasis kp2 = KNilBasis::kp(2);
  const KNilVerdict good = knil_check(z.certificate, kp2), bad = knil_check(z.corrupted, kp2),
                    zero = knil_check(z.zero, kp2);
  r.add("K(Z/4,1) certificate accepted", good.accepted, {{"log", good.log}});
  r.add("stage square with the found classifying map", z.stage.ok, {{"pi1_pullback", z.stage.pi1_pullback}});
  r.add("corrupted fibration leg rejected", !bad.accepted,
        {{"failing_node", bad.failing_node}, {"condition", bad.condition}});
  r.add("zero classifying map rejected", !zero.accepted && !z.zero_stage.ok,
        {{"failing_node", zero.failing_node}, {"condition", zero.condition}, {"stage", z.zero_stage.condition}});
  return r;
}

namespace {

Json rows_json(const HomologyComparison& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows)
    rows.push_back({{"degree", row.degree}, {"lhs", row.lhs.to_string()}, {"rhs", row.rhs.to_string()}, {"equal", row.equal}});
  return {{"certificate", c.certificate}, {"homology", rows}};
}

}  // namespace

Report example_quillen_a() {
  Report r;
  r.command = "example quillen-a";
  r.params["max_degree"] = 2;
  for (const auto& e : quillen_a_examples()) {
    const auto c = quillen_a_compare(e, 2);
    r.add(e.name, c.agree(), rows_json(c));
  }
  return r;
}

Report example_thomason() {
  Report r;
  r.command = "example thomason";
  r.params["max_degree"] = 2;
  for (const auto& e : thomason_examples()) {
    const auto c = thomason_compare(e, 2);
    r.add(e.name, c.agree(), rows_json(c));
  }
  return r;
}

Report example_wfc() {
  Report r;
  r.command = "example wfc";
  for (const auto& f : wfc_fixtures()) {
    const WfcVerdict v = wfc_check(f.category, f.w, f.fib);
    const bool expected = f.expected_axiom < 0 ? v.ok : (!v.ok && v.axiom == f.expected_axiom);
    r.add(f.name, expected,
          {{"expected", f.expected_axiom < 0 ? "pass" : wfc_axiom_name(f.expected_axiom)},
           {"got", v.ok ? "pass" : v.axiom_name},
           {"message", v.message}});
  }
  return r;
}

Report example_eilenberg_maclane() {
  Report r;
  r.command = "example eilenberg-maclane";
  for (int k : {2, 3, 4, 6}) {
    const HomotopyGroup g = homotopy_group(b_group(FinGroup::cyclic(k)), 0, 1);
    const bool ok = g.abelian && g.abelian->invariant_factors() == std::vector<long long>{k};
    r.add("pi1 B(Z/" + std::to_string(k) + ")", ok, {{"group", g.abelian ? g.abelian->to_string() : "non-abelian"}});
  }
  for (int m : {2, 3}) {
    const TauSSet k2 = k_abelian(FinAbGroup::cyclic(m), 2).sset;
    const HomotopyGroup p1 = homotopy_group(k2, 0, 1), p2 = homotopy_group(k2, 0, 2);
    const bool ok = p1.elements.size() == 1 && p2.abelian && p2.abelian->invariant_factors() == std::vector<long long>{m};
    r.add("pi1, pi2 K(Z/" + std::to_string(m) + ",2)", ok,
          {{"pi1_order", p1.elements.size()}, {"pi2", p2.abelian ? p2.abelian->to_string() : "non-abelian"}});
  }
  const int c3 = k_abelian(FinAbGroup::cyclic(2), 2).sset.count(3);
  r.add("|Gamma((Z/2)[2])_3|", c3 == 8, {{"count", c3}});
  return r;
}

Report example_reindex(const std::vector<Elem>& depths, const std::vector<int>& targets) {
  Report r;
  r.command = "example reindex";
  r.params = {{"depths", depths}, {"targets", targets}};
  const ProObject<FinAbBase> x = cyclic_group_tower();
  const Elem top = *std::max_element(depths.begin(), depths.end());
  const auto re = reindex(x, PosetMap::factorials(), top);
  for (int m : targets)
    for (Elem d : depths) {
      const auto a = pro_hom_to_simple(x, FinAbGroup::cyclic(m), d);
      const auto b = pro_hom_to_simple(re.pulled, FinAbGroup::cyclic(m), d);
      r.add("Z/" + std::to_string(m) + " at depth " + std::to_string(d),
            a.count() == b.count() && a.count() == m,
            {{"before", a.count()}, {"after", b.count()}, {"stability_before", a.stability()},
             {"stability_after", b.stability()}});
    }
  return r;
}

Report example_mapping_space(const std::vector<int>& targets) {
  Report r;
  r.command = "example mapping-space";
  r.params["targets"] = targets;
  const ProObject<KanBase> tower = classifying_tower();
  for (int m : targets) {
    const Elem depth = 4 * m;
    const TauSSet bm = b_group(FinGroup::cyclic(m));
    const auto classes = pro_hom_to_simple(up_to_homotopy(tower), bm, depth);
    const auto colim = colim_pi0_mapping(tower, bm, depth);
    r.add("[{B Z/n}, B Z/" + std::to_string(m) + "]",
          static_cast<std::size_t>(classes.count()) == colim.count() && classes.count() == m,
          {{"depth", depth}, {"homotopy_classes", classes.count()}, {"colim_pi0", colim.count()},
           {"stability", classes.stability()}});
  }
  return r;
}

std::vector<std::string> example_names() {
  return {"circle", "postnikov-z4", "quillen-a", "thomason", "wfc", "eilenberg-maclane", "reindex", "mapping-space",
          "cosk"};
}

Report run_example(const std::string& name, Elem depth, const std::vector<long long>& primes) {
  if (name == "circle") return example_circle(depth, primes);
  if (name == "postnikov-z4") return example_postnikov_z4();
  if (name == "quillen-a") return example_quillen_a();
  if (name == "thomason") return example_thomason();
  if (name == "wfc") return example_wfc();
  if (name == "eilenberg-maclane") return example_eilenberg_maclane();
  if (name == "reindex") return example_reindex({5, 10, 15}, {2, 3, 4});
  if (name == "mapping-space") return example_mapping_space({2, 3});
  if (name == "cosk") return check_coskeleta();
  throw PreconditionError("unknown example " + name);
}

}  // namespace procat
