#include "procat/examples.hpp"

#include <algorithm>

#include "procat/chain.hpp"
#include "procat/eilmac.hpp"
#include "procat/search.hpp"

namespace procat {

std::vector<NamedSSet> coskeletal_examples() {
  std::vector<NamedSSet> out;
  auto add = [&](std::string name, TauSSet x) { out.push_back({std::move(name), std::move(x)}); };
  add("point", point());
  add("K(S,0):2", discrete(2));
  add("K(S,0):3", discrete(3));
  for (int m = 1; m <= 3; ++m) add("Delta^" + std::to_string(m), standard_simplex(m, 3).sset);
  for (int k : {2, 3, 4}) add("B(Z/" + std::to_string(k) + ")", b_group(FinGroup::cyclic(k)));
  add("B(S3)", b_group(FinGroup::symmetric3()));
  add("E(Z/2)", e_group(FinGroup::cyclic(2)));
  add("E(Z/3)", e_group(FinGroup::cyclic(3)));
  add("K(Z/2,2)", k_abelian(FinAbGroup::cyclic(2), 2).sset);
  add("K(Z/3,2)", k_abelian(FinAbGroup::cyclic(3), 2).sset);
  add("N(parallel pair)", nerve(FinCategory::parallel_pair()));
  add("N(idempotent)", nerve(FinCategory::idempotent()));
  add("N([2])", nerve(FinPoset::chain(3).as_category()));
  add("N(2x2 lattice)", nerve(FinPoset::from_relation({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).as_category()));
  add("W K(Z/2,1)", l_to_k_fibration(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(2)), 1).l);
  add("B(Z/2) x Delta^1", product(b_group(FinGroup::cyclic(2)), standard_simplex(1, 3).sset).object);
  return out;
}

namespace {

FinPoset square() { return FinPoset::from_relation({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

std::vector<CofinalityExample> quillen_a_examples() {
  std::vector<CofinalityExample> out;
  const FinCategory c3 = FinPoset::chain(3).as_category();
  out.push_back({"identity of [2]", FinFunctor::identity(c3), std::nullopt});
  out.push_back({"top of [2]", FinFunctor::full_inclusion(c3, {2}), std::nullopt});
  out.push_back({"idempotent -> point", FinFunctor{FinCategory::idempotent(), FinCategory::terminal(), {0}, {0, 0}},
                 std::nullopt});
  const FinCategory c2 = FinPoset::chain(2).as_category();
  out.push_back({"[1] x [1] -> [1]", FinFunctor::projection(c2, c2), std::nullopt});
  const FinCategory sq = square().as_category();
  out.push_back({"{a, 1} in the square", FinFunctor::full_inclusion(sq, {1, 3}), std::nullopt});
  return out;
}

std::vector<CofinalityExample> thomason_examples() {
  std::vector<CofinalityExample> out;
  const FinCategory cospan = FinCategory::build({"a", "b", "t"}, {{"u", "a", "t"}, {"v", "b", "t"}}, {});
  const int a = cospan.object_index("a"), b = cospan.object_index("b"), t = cospan.object_index("t");
  SetFunctor h;
  h.sets.assign(3, 0);
  h.sets[a] = 2;
  h.sets[b] = 1;
  h.sets[t] = 2;
  h.maps.resize(cospan.num_morphisms());
  for (int f = 0; f < cospan.num_morphisms(); ++f)
    for (int x = 0; x < h.sets[cospan.dom[f]]; ++x) h.maps[f].push_back(x);  // u is the identity, v hits 0
  out.push_back({"identity of a -> t <- b", FinFunctor::identity(cospan), h});
  out.push_back({"terminal object of a -> t <- b", FinFunctor::full_inclusion(cospan, {t}), h});

  // two points everywhere, v swaps them
  SetFunctor swap;
  swap.sets = {2, 2, 2};
  swap.maps.assign(cospan.num_morphisms(), {0, 1});
  swap.maps[cospan.morphism_index("v")] = {1, 0};
  out.push_back({"(a -> t <- b) x [1] -> (a -> t <- b)", FinFunctor::projection(cospan, FinPoset::chain(2).as_category()),
                 swap});
  return out;
}

bool HomologyComparison::agree() const {
  return certified && std::all_of(rows.begin(), rows.end(), [](const HomologyRow& r) { return r.equal; });
}

namespace {

std::vector<HomologyRow> compare_homology(const TauSSet& a, const TauSSet& b, int max_degree) {
  std::vector<HomologyRow> rows;
  for (int k = 0; k <= max_degree; ++k) {
    HomologyRow r;
    r.degree = k;
    r.lhs = homology_piece(a, k, 0).q.group();
    r.rhs = homology_piece(b, k, 0).q.group();
    r.equal = r.lhs.invariant_factors() == r.rhs.invariant_factors() && r.lhs.free_rank() == r.rhs.free_rank();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

HomologyComparison quillen_a_compare(const CofinalityExample& e, int max_degree) {
  e.functor.validate();
  HomologyComparison c;
  c.name = e.name;
  auto v = check_coinitial_classical(e.functor);
  c.certificate = v.label();
  c.certified = v.all && v.certified;
  c.rows = compare_homology(nerve(e.functor.source, max_degree + 1), nerve(e.functor.target, max_degree + 1), max_degree);
  return c;
}

HomologyComparison thomason_compare(const CofinalityExample& e, int max_degree) {
  if (!e.h) throw PreconditionError("Thomason example needs a functor H");
  e.functor.validate();
  e.h->validate(e.functor.target);
  HomologyComparison c;
  c.name = e.name;
  auto v = check_cofinal_classical(e.functor);
  c.certificate = v.label();
  c.certified = v.all && v.certified;
  auto lhs = grothendieck_set(e.functor.source, e.h->pull_back(e.functor));
  auto rhs = grothendieck_set(e.functor.target, *e.h);
  c.rows = compare_homology(nerve(lhs.category, max_degree + 1), nerve(rhs.category, max_degree + 1), max_degree);
  return c;
}

PostnikovZ4 postnikov_z4() {
  const TauSSet x = b_group(FinGroup::cyclic(2)).renamed("B(Z/2)");
  const TauSSet b4 = b_group(FinGroup::cyclic(4)).renamed("B(Z/4)");
  const GModule m = GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(2));
  const LToK lk = l_to_k_fibration(m, 1);
  auto cands = classifying_map_search(x, lk.projection, b4);
  PostnikovZ4 out;
  bool have_good = false, have_zero = false;
  for (const auto& c : cands) {
    if (c.pullback_matches && !have_good) {
      out.classifying = c.map;
      have_good = true;
    } else if (!c.pullback_matches && !have_zero) {
      out.zero_map = c.map;
      have_zero = true;
    }
  }
  if (!have_good || !have_zero) throw InvariantViolation("classifying map search did not find both classes");

  auto build = [&](const SimplicialMap& f, bool via_iso) {
    const Pullback pb = pullback(f, lk.projection);
    KNilCertificate c;
    KNilNode root;
    root.id = "root";
    root.object = b4;
    root.children = {1};
    if (via_iso) {
      root.kind = KNilKind::Iso;
      auto iso = find_isomorphism(b4, pb.object);
      if (!iso) throw InvariantViolation("B(Z/4) is not isomorphic to the pullback");
      root.iso = *iso;
    } else {
      root.kind = KNilKind::WeakEquivalence;
      root.we_method = WeMethod::MinimalIso;
    }
    KNilNode p;
    p.id = "pullback";
    p.kind = KNilKind::Pullback;
    p.object = pb.object;
    p.children = {2, 3, 5};
    p.leg_x = f;
    p.leg_y = lk.projection;
    p.pr_x = pb.pr1;
    p.pr_y = pb.pr2;
    p.marked = 1;
    KNilNode nx;
    nx.id = "X";
    nx.label = "B(Z/2)";
    nx.object = x;
    KNilNode ny;
    ny.id = "L";
    ny.kind = KNilKind::WeakEquivalence;
    ny.object = lk.l;
    ny.children = {4};
    KNilNode pt;
    pt.id = "pt";
    pt.kind = KNilKind::Point;
    pt.object = point();
    KNilNode nz;
    nz.id = "K";
    nz.label = "K(Z/2,2)";
    nz.object = lk.k;
    nz.iso = *find_isomorphism(lk.k, k_abelian(FinAbGroup::cyclic(2), 2).sset);
    c.nodes = {root, p, nx, ny, pt, nz};
    c.root = 0;
    return c;
  };
  out.certificate = build(out.classifying, true);
  out.corrupted = out.certificate;
  out.corrupted.nodes[1].marked = 0;
  out.zero = build(out.zero_map, false);
  out.stage = postnikov_stage_verify(b4, x, m, 1, out.classifying);
  out.zero_stage = postnikov_stage_verify(b4, x, m, 1, out.zero_map);
  return out;
}

std::vector<WfcFixture> wfc_fixtures() {
  std::vector<WfcFixture> out;
  const FinCategory bl = square().as_category();
  out.push_back({"lattice", bl, isomorphisms(bl), all_morphisms(bl), -1});

  auto fib = all_morphisms(bl);
  fib[bl.morphism_index("id_a")] = 0;
  out.push_back({"fibrations miss an identity", bl, isomorphisms(bl), fib, 0});

  const FinCategory d = FinCategory::discrete({"u", "v"});
  out.push_back({"two discrete objects", d, isomorphisms(d), all_morphisms(d), 1});

  // cospan x -> z <- y with its pullback p on top
  const FinCategory sq = FinPoset::from_relation({"z", "x", "y", "p"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).as_category();
  auto w = isomorphisms(sq);
  w[sq.morphism_index("p>x")] = 1;
  w[sq.morphism_index("p>z")] = 1;
  out.push_back({"cospan square, W without x -> z", sq, w, all_morphisms(sq), 2});

  auto fb = isomorphisms(bl);
  fb[bl.morphism_index("a>0")] = 1;
  out.push_back({"a -> 0 alone as a fibration", bl, isomorphisms(bl), fb, 3});

  out.push_back({"only isomorphisms are fibrations", bl, isomorphisms(bl), isomorphisms(bl), 4});
  return out;
}

}  // namespace procat
