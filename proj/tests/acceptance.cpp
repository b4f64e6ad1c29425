// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "procat/chain.hpp"
#include "procat/eilmac.hpp"
#include "procat/examples.hpp"
#include "procat/homotopy.hpp"
#include "procat/knil.hpp"
#include "procat/profinite.hpp"
#include "procat/proeng.hpp"
#include "procat/wfc.hpp"

using namespace procat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_cyclic_of_order(const HomotopyGroup& g, int k) {
  if (g.group.order() != k) return false;
  for (int e = 0; e < g.group.order(); ++e)
    if (g.group.element_order(e) == k) return true;
  return k == 1;
}

Outcome crit_circle() {
  const Elem depth = 20;
  const CompletionTower c = circle_completion();
  c.verify(depth);
  const HomologyTower hx = homology_tower(c.map.source, 1), hy = homology_tower(c.tower, 1);
  // H_1 of the circle is Z and every H_1(B Z/n) is finite, so only the zero
  // map goes back levelwise.
  bool source_free = hx.groups.value(0) == FinAbGroup::free(1);
  bool targets_finite = true;
  for (Elem e = 0; e < depth; ++e) targets_finite = targets_finite && hy.groups.value(e).is_finite();
  const AbIsoVerdict iso = pro_ab_iso_check(pro_h1_map(c.map, hx, hy), depth);
  const bool obstruction = iso.obstruction.find("Hom(Z/2, Z) = 0") != std::string::npos;
  std::string detail = "pro-H1 " + std::string(iso.iso ? "iso" : "not iso");
  bool morel = true;
  for (long long p : {2, 3, 5}) {
    const MorelVerdict m = morel_equiv_check(c.map, p, 1, depth);
    bool degrees_ok = m.degrees.size() == 2;
    for (const auto& d : m.degrees) degrees_ok = degrees_ok && d.bijective && d.target == FinAbGroup::cyclic(p);
    morel = morel && m.equivalent && degrees_ok;
    detail += ", Z/" + std::to_string(p) + (m.equivalent ? " yes" : " no");
  }
  return {!iso.iso && obstruction && source_free && targets_finite && morel, detail};
}

Outcome crit_eilenberg_maclane() {
  bool ok = true;
  std::string detail;
  for (int k : {2, 3, 4, 6}) {
    const HomotopyGroup g = homotopy_group(b_group(FinGroup::cyclic(k)), 0, 1);
    const bool good = is_cyclic_of_order(g, k) && g.abelian && *g.abelian == FinAbGroup::cyclic(k);
    ok = ok && good;
    detail += "pi1 B(Z/" + std::to_string(k) + ")=" + (g.abelian ? g.abelian->to_string() : "?") + " ";
  }
  for (int m : {2, 3}) {
    const TauSSet x = k_abelian(FinAbGroup::cyclic(m), 2).sset;
    const HomotopyGroup p1 = homotopy_group(x, 0, 1), p2 = homotopy_group(x, 0, 2);
    const bool good = p1.group.order() == 1 && is_cyclic_of_order(p2, m);
    ok = ok && good;
    detail += "pi2 K(Z/" + std::to_string(m) + ",2)=" + (p2.abelian ? p2.abelian->to_string() : "?") + " ";
  }
  // |Γ(A[n])_m| = |A|^C(m,n)
  const int count = k_abelian(FinAbGroup::cyclic(2), 2).sset.count(3);
  ok = ok && count == ipow(2, binomial(3, 2)) && count == 8;
  detail += "|Gamma_3|=" + std::to_string(count);
  return {ok, detail};
}

Outcome crit_coskeleta() {
  const auto examples = coskeletal_examples();
  int good = 0;
  std::string failures;
  for (const auto& [name, x] : examples) {
    const int n = x.cosk_level();
    const TauSSet c1 = coskeleton(x.truncate(n), n);
    const TauSSet c2 = coskeleton(c1.truncate(n), n);
    if (is_isomorphism(coskeleton_unit(x, n)) && same_structure(c1, c2))
      ++good;
    else
      failures += " " + name;
  }
  bool formula = true;
  for (int s = 1; s <= 3; ++s) {
    const TauSSet c = coskeleton(Truncated{Level{s, {}, {}}}, 0);
    for (int m = 0; m <= 4; ++m) formula = formula && c.count(m) == ipow(s, m + 1);
  }
  return {examples.size() == 20 && good == 20 && formula,
          std::to_string(good) + "/" + std::to_string(examples.size()) + " objects" +
              (formula ? ", cosk0 formula holds" : ", cosk0 formula fails") + failures};
}

Outcome crit_special_levelwise() {
  std::mt19937_64 rng(7);
  int passed = 0;
  const int total = 100;
  for (int t = 0; t < total; ++t) {
    const FinPoset shape = random_poset(rng, 8);
    const auto y = random_finset_diagram(shape, rng, 2);
    const FinSetClass forced = static_cast<FinSetClass>(t % 3);
    const auto f = random_finset_map(y, rng, forced);
    f.validate();
    bool ok = true;
    for (FinSetClass c : {FinSetClass::Surjective, FinSetClass::Injective, FinSetClass::Bijective}) {
      auto pred = [c](const FnMap& m) { return in_finset_class(m, c); };
      const bool special = is_special(f, pred).ok;
      if (c == forced && !special) ok = false;
      if (special && !is_levelwise(f, pred).ok) ok = false;
    }
    passed += ok;
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total)};
}

Outcome crit_factorization() {
  const int per_base = 50;
  std::mt19937_64 rng(7);
  int finset = 0, kan = 0;
  std::string first_failure;
  for (int t = 0; t < per_base; ++t) {
    const auto y = random_finset_diagram(random_poset(rng, 6), rng, 2);
    const auto f = random_finset_map(y, rng, std::nullopt);
    const auto c = check_factorization(f, factorize_diagram(f));
    if (c.ok()) ++finset;
    else if (first_failure.empty()) first_failure = " finset: " + c.failure;
  }
  std::mt19937_64 rng2(7);
  for (int t = 0; t < per_base; ++t) {
    const auto f = random_kan_map(rng2, 3);
    const auto c = check_factorization(f, factorize_diagram(f));
    if (c.ok()) ++kan;
    else if (first_failure.empty()) first_failure = " kan: " + c.failure;
  }
  return {finset == per_base && kan == per_base,
          "FinSet " + std::to_string(finset) + "/50, Kan " + std::to_string(kan) + "/50" + first_failure};
}

Outcome crit_reindexing() {
  const ProObject<FinAbBase> x = cyclic_group_tower();
  const auto re = reindex(x, PosetMap::factorials(), 15);
  bool ok = true;
  std::string detail;
  for (int m : {2, 3, 4}) {
    detail += "Z/" + std::to_string(m) + ":";
    for (Elem d : {5, 10, 15}) {
      const int before = pro_hom_to_simple(x, FinAbGroup::cyclic(m), d).count();
      const int after = pro_hom_to_simple(re.pulled, FinAbGroup::cyclic(m), d).count();
      ok = ok && before == after && after == m;
      detail += " " + std::to_string(before) + "/" + std::to_string(after);
    }
    detail += " ";
  }
  return {ok, detail};
}

Outcome crit_quillen_thomason() {
  int qa = 0, th = 0;
  const auto qs = quillen_a_examples();
  const auto ts = thomason_examples();
  for (const auto& e : qs) {
    const auto c = quillen_a_compare(e, 2);
    qa += c.certified && c.agree() && c.rows.size() == 3;
  }
  for (const auto& e : ts) {
    const auto c = thomason_compare(e, 2);
    th += c.certified && c.agree() && c.rows.size() == 3;
  }
  return {qs.size() == 5 && ts.size() == 3 && qa == 5 && th == 3,
          "Quillen A " + std::to_string(qa) + "/5, Thomason " + std::to_string(th) + "/3"};
}

Outcome crit_knil() {
  const PostnikovZ4 z = postnikov_z4();
  const KNilBasis kp2 = KNilBasis::kp(2);
  const KNilVerdict good = knil_check(z.certificate, kp2);
  const KNilVerdict bad = knil_check(z.corrupted, kp2);
  const KNilVerdict zero = knil_check(z.zero, kp2);
  const bool corrupted_ok = !bad.accepted && bad.condition.find("horn") != std::string::npos;
  const bool zero_ok = !zero.accepted && !z.zero_stage.ok && z.zero_stage.pi1_pullback == "Z/2 + Z/2";
  return {good.accepted && z.stage.ok && z.stage.pi1_pullback == "Z/4" && corrupted_ok && zero_ok,
          std::string("certificate ") + (good.accepted ? "accepted" : "rejected: " + good.condition) +
              "; corrupted: " + bad.failing_node + " (" + bad.condition + "); zero: " + zero.failing_node + " (" +
              zero.condition + ")"};
}

Outcome crit_mapping_space() {
  const ProObject<KanBase> tower = classifying_tower();
  bool ok = true;
  std::string detail;
  for (int m : {2, 3}) {
    const Elem depth = 4 * m;  // covers n = m, 2m, 4m
    const TauSSet bm = b_group(FinGroup::cyclic(m));
    const int route1 = pro_hom_to_simple(up_to_homotopy(tower), bm, depth).count();
    const auto route2 = colim_pi0_mapping(tower, bm, depth).count();
    ok = ok && static_cast<std::size_t>(route1) == route2 && route1 == m;
    detail += "m=" + std::to_string(m) + ": " + std::to_string(route1) + " vs " + std::to_string(route2) + " ";
  }
  return {ok, detail};
}

Outcome crit_wfc() {
  std::set<int> negatives;
  bool ok = true, positive = false;
  std::string detail;
  for (const auto& f : wfc_fixtures()) {
    const WfcVerdict v = wfc_check(f.category, f.w, f.fib);
    if (f.expected_axiom < 0) {
      positive = positive || v.ok;
      ok = ok && v.ok;
    } else {
      ok = ok && !v.ok && v.axiom == f.expected_axiom && v.axiom_name == wfc_axiom_name(f.expected_axiom);
      negatives.insert(f.expected_axiom);
      detail += v.axiom_name + "; ";
    }
  }
  return {ok && positive && negatives == std::set<int>{0, 1, 2, 3, 4}, detail};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double seconds;  // runtime limit, 0 for none
  };
  const std::vector<Criterion> criteria = {
      {"1 circle separation at depth 20", crit_circle, 30},
      {"2 Eilenberg-MacLane invariants", crit_eilenberg_maclane, 60},
      {"3 coskeleton suite", crit_coskeleta, 0},
      {"4 special implies levelwise", crit_special_levelwise, 0},
      {"5 factorization contract", crit_factorization, 0},
      {"6 reindexing invariance", crit_reindexing, 0},
      {"7 Quillen A and Thomason homology", crit_quillen_thomason, 0},
      {"8 K_nil certification of K(Z/4,1)", crit_knil, 300},
      {"9 mapping-space spot check", crit_mapping_space, 0},
      {"10 WFC axiom checker", crit_wfc, 0},
  };
  int failed = 0;
  for (const auto& [name, run, limit] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail += " over the " + std::to_string(static_cast<int>(limit)) + "s limit";
    }
    std::printf("%s %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    failed += !o.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
