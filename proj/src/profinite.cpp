#include "procat/profinite.hpp"

#include <map>
#include <mutex>

#include "procat/eilmac.hpp"
#include "procat/group.hpp"

namespace procat {

ProObject<KanHoBase> up_to_homotopy(const ProObject<KanBase>& x) {
  return {x.name, x.index, x.value, x.transition};
}

TauSSet nerve_parallel_pair() { return nerve(FinCategory::parallel_pair(), 3).renamed("N(I)"); }

SimplicialMap cyclic_quotient_map(const TauSSet& bn, const TauSSet& bm, int n, int m) {
  if (n % m != 0) throw PreconditionError("Z/" + std::to_string(n) + " does not map onto Z/" + std::to_string(m));
  const int top = std::min(bn.stored_dim(), bm.stored_dim());
  std::vector<std::vector<int>> lv(top + 1);
  for (int k = 0; k <= top; ++k)
    for (int x = 0; x < bn.count(k); ++x) {
      auto t = decode_uniform(x, n, k);
      for (int& g : t) g %= m;
      lv[k].push_back(static_cast<int>(encode_uniform(t, m)));
    }
  return SimplicialMap(bn, bm, std::move(lv));
}

ProObject<KanBase> classifying_tower() {
  ProObject<KanBase> x;
  x.name = "{N B(Z/n)}";
  x.index = EffPoset::divisibility();
  x.value = [](Elem e) {
    const int n = static_cast<int>(e + 1);
    return b_group(FinGroup::cyclic(n)).renamed("B(Z/" + std::to_string(n) + ")");
  };
  ProObject<KanBase> base = x;
  x = x.cached();
  auto value = x.value;
  x.transition = [value](Elem i, Elem j) {
    return cyclic_quotient_map(value(i), value(j), static_cast<int>(i + 1), static_cast<int>(j + 1));
  };
  return x.cached();
}

ProObject<FinAbBase> cyclic_group_tower() {
  ProObject<FinAbBase> x;
  x.name = "{Z/n}";
  x.index = EffPoset::divisibility();
  x.value = [](Elem e) { return FinAbGroup::cyclic(e + 1); };
  x.transition = [](Elem i, Elem j) {
    auto s = FinAbGroup::cyclic(i + 1), t = FinAbGroup::cyclic(j + 1);
    IntMat m(num_gens(t), num_gens(s));
    if (m.rows > 0 && m.cols > 0) m(0, 0) = 1;
    return FinAbBase::make(s, t, std::move(m));
  };
  return x;
}

void CompletionTower::verify(Elem depth) const {
  tower.validate(depth);
  if (!rep_compatible(map, depth)) throw InvariantViolation("completion map components are not compatible");
  for (Elem t : tower.index.fragment(depth)) {
    auto [s, f] = map.at(t);
    if (s != 0 || f.source().name() != source.name()) throw InvariantViolation("completion map has a wrong source");
  }
}

CompletionTower circle_completion() {
  CompletionTower c;
  c.source = nerve_parallel_pair();
  c.tower = classifying_tower();
  const FinCategory cat = FinCategory::parallel_pair();
  const int alpha = cat.morphism_index("alpha"), beta = cat.morphism_index("beta");
  auto chains = nerve_chains(cat, 3);
  auto src = c.source;
  auto tower = c.tower;
  ProObject<KanBase> simple = ProObject<KanBase>::constant(c.source, EffPoset::chain(1), "N(I)");
  c.map = {simple, c.tower, [src, tower, chains, alpha, beta](Elem t) {
             const int n = static_cast<int>(t + 1);
             const TauSSet bn = tower.value(t);
             // α ↦ 1, β ↦ 0, identities ↦ 0
             auto value = [&](int f) { return f == alpha ? 1 % n : (f == beta ? 0 : 0); };
             std::vector<std::vector<int>> lv(4);
             for (int k = 0; k <= 3; ++k)
               for (const auto& ch : chains[k]) {
                 if (k == 0) {
                   lv[0].push_back(0);
                   continue;
                 }
                 std::vector<int> tu;
                 for (int f : ch) tu.push_back(value(f));
                 lv[k].push_back(static_cast<int>(encode_uniform(tu, n)));
               }
             return std::make_pair(Elem{0}, SimplicialMap(src, bn, std::move(lv)));
           }};
  return c;
}

// ---------------------------------------------------------------------------
// Homology towers

namespace {

struct PieceMemo {
  std::mutex mu;
  std::map<Elem, GradedPiece> pieces;
};

}  // namespace

HomologyTower homology_tower(const ProObject<KanBase>& x, int k, long long modulus) {
  auto memo = std::make_shared<PieceMemo>();
  auto value = x.value;
  HomologyTower h;
  h.piece = [memo, value, k, modulus](Elem i) {
    {
      std::lock_guard lk(memo->mu);
      auto it = memo->pieces.find(i);
      if (it != memo->pieces.end()) return it->second;
    }
    GradedPiece p = homology_piece(value(i), k, modulus);
    std::lock_guard lk(memo->mu);
    return memo->pieces.emplace(i, std::move(p)).first->second;
  };
  auto piece = h.piece;
  auto trans = x.transition;
  h.groups.name = "H_" + std::to_string(k) + "(" + x.name + ")";
  h.groups.index = x.index;
  h.groups.value = [piece](Elem i) { return piece(i).q.group(); };
  h.groups.transition = [piece, trans](Elem i, Elem j) {
    auto pi = piece(i), pj = piece(j);
    return FinAbBase::make(pi.q.group(), pj.q.group(), induced_on_homology(trans(i, j), pi, pj));
  };
  h.groups = h.groups.cached();
  return h;
}

ProObject<FinAbBase> pro_h1(const ProObject<KanBase>& x, Elem depth) {
  auto h = homology_tower(x, 1).groups;
  h.validate(depth);
  return h;
}

RepProMap<FinAbBase> pro_h1_map(const RepProMap<KanBase>& f, const HomologyTower& hx, const HomologyTower& hy) {
  auto at = f.at;
  auto px = hx.piece, py = hy.piece;
  return {hx.groups, hy.groups, [at, px, py](Elem t) {
            auto [s, m] = at(t);
            auto a = px(s), b = py(t);
            return std::make_pair(s, FinAbBase::make(a.q.group(), b.q.group(), induced_on_homology(m, a, b)));
          }};
}

namespace {

bool is_zero(const AbHom& h) {
  return std::all_of(h.m.a.begin(), h.m.a.end(), [](long long v) { return v == 0; });
}

// g built from a family of classes; targets outside the fragment throw
RepProMap<FinAbBase> family_map(const ProHom<FinAbBase>& h, const std::vector<int>& fam, const ProObject<FinAbBase>& src,
                                const ProObject<FinAbBase>& tgt) {
  std::map<Elem, std::pair<Elem, AbHom>> reps;
  for (std::size_t s = 0; s < h.targets.size(); ++s) reps.emplace(h.targets[s], h.classes[s].reps[fam[s]]);
  return {src, tgt, [reps](Elem t) {
            auto it = reps.find(t);
            if (it == reps.end()) throw PreconditionError("candidate inverse is not defined beyond the fragment");
            return it->second;
          }};
}

bool two_sided(const RepProMap<FinAbBase>& f, const RepProMap<FinAbBase>& g, Elem depth) {
  try {
    return rep_compatible(g, depth) && rep_equal(compose_rep(g, f), identity_rep(f.source), depth) &&
           rep_equal(compose_rep(f, g), identity_rep(f.target), depth);
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

AbIsoVerdict pro_ab_iso_check(const RepProMap<FinAbBase>& f, Elem depth,
                              const std::optional<RepProMap<FinAbBase>>& candidate) {
  AbIsoVerdict v;
  v.depth = depth;
  if (!rep_compatible(f, depth)) throw PreconditionError("map is not compatible on the fragment");
  if (candidate) {
    v.candidates = 1;
    if (two_sided(f, *candidate, depth)) {
      v.iso = true;
      v.inverse = candidate;
      return v;
    }
  }
  auto h = pro_hom(f.target, f.source, depth);
  v.candidates += h.families.size();
  for (const auto& fam : h.families) {
    auto g = family_map(h, fam, f.target, f.source);
    if (two_sided(f, g, depth)) {
      v.iso = true;
      v.inverse = g;
      return v;
    }
  }
  bool all_zero = true;
  for (const auto& c : h.classes)
    for (const auto& r : c.reps) all_zero = all_zero && is_zero(r.second);
  const bool source_nonzero = [&] {
    for (Elem t : f.source.index.fragment(depth))
      if (!f.source.value(t).is_trivial()) return true;
    return false;
  }();
  if (all_zero && source_nonzero) {
    std::string example;
    for (Elem s : f.target.index.fragment(depth))
      if (!f.target.value(s).is_trivial()) {
        example = "Hom(" + f.target.value(s).to_string() + ", " + f.source.value(f.source.index.fragment(1)[0]).to_string() +
                  ") = 0";
        break;
      }
    v.obstruction = "no inverse at depth " + std::to_string(depth) + ": every class " + f.target.name + " -> " +
                    f.source.name + " is zero since Hom(Y_s, X_t) = 0 levelwise (e.g. " + example + ")";
  } else {
    v.obstruction = "no inverse at depth " + std::to_string(depth) + " among " + std::to_string(h.families.size()) +
                    " candidate families";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cohomology colimits

namespace {

struct CohomologyData {
  ProObject<KanBase> x;
  int k;
  long long p;
  std::map<Elem, GradedPiece> pieces;
  std::map<std::pair<Elem, Elem>, IntMat> pulls;

  const GradedPiece& piece(Elem i) {
    auto it = pieces.find(i);
    if (it == pieces.end()) it = pieces.emplace(i, cohomology_piece(x.value(i), k, p)).first;
    return it->second;
  }
  // t_ij^* : H^k(X_j) -> H^k(X_i) on element codes
  long long pull(Elem i, Elem j, long long c) {
    if (i == j) return c;
    auto key = std::make_pair(i, j);
    auto it = pulls.find(key);
    if (it == pulls.end()) it = pulls.emplace(key, induced_on_cohomology(x.transition(i, j), piece(i), piece(j))).first;
    return apply(it->second, piece(j).q.group(), piece(i).q.group(), c);
  }
  static long long apply(const IntMat& m, const FinAbGroup& src, const FinAbGroup& tgt, long long c) {
    auto in = src.decode(c);
    std::vector<long long> out(tgt.invariant_factors().size(), 0);
    for (std::size_t r = 0; r < out.size(); ++r) {
      for (std::size_t s = 0; s < in.size(); ++s) out[r] += m(static_cast<int>(r), static_cast<int>(s)) * in[s];
      out[r] = mod_ll(out[r], tgt.invariant_factors()[r]);
    }
    return tgt.encode(out);
  }
  bool equivalent(Elem i, long long c, Elem j, long long d, Elem depth) {
    auto test = [&](Elem m) { return pull(m, i, c) == pull(m, j, d); };
    if (test(x.index.join(i, j))) return true;
    for (Elem m : x.index.fragment(depth))
      if (x.index.leq(i, m) && x.index.leq(j, m) && test(m)) return true;
    return false;
  }
  std::vector<std::pair<Elem, long long>> classes(Elem depth) {
    std::vector<std::pair<Elem, long long>> reps;
    for (Elem i : x.index.fragment(depth)) {
      const long long n = piece(i).q.group().order();
      for (long long c = 0; c < n; ++c) {
        bool found = false;
        for (const auto& [j, d] : reps)
          if (equivalent(j, d, i, c, depth)) {
            found = true;
            break;
          }
        if (!found) reps.emplace_back(i, c);
      }
    }
    return reps;
  }
};

}  // namespace

std::string ProCohomology::stability() const {
  return stable() ? "stable-at-depth " + std::to_string(stable_since) : "not stable at depth " + std::to_string(depth);
}

ProCohomology pro_cohomology(const ProObject<KanBase>& x, long long p, int k, Elem depth) {
  if (depth < 1) throw PreconditionError("depth must be at least 1");
  CohomologyData data{x, k, p, {}, {}};
  ProCohomology out;
  out.degree = k;
  out.prime = p;
  out.depth = depth;
  out.reps = data.classes(depth);
  std::vector<int> orders;
  for (const auto& [i, c] : out.reps) {
    const FinAbGroup& g = data.piece(i).q.group();
    long long m = 1, acc = c;
    while (!data.equivalent(i, acc, i, 0, depth)) {
      acc = g.add(acc, c);
      ++m;
    }
    orders.push_back(static_cast<int>(m));
  }
  out.group = abelian_type_from_orders(orders);
  Elem d0 = 1;
  for (const auto& r : out.reps) d0 = std::max(d0, r.first + 1);
  const Elem full = x.index.size ? std::min(*x.index.size, depth) : depth;
  out.stable_since = full;
  for (Elem d = full - 1; d >= d0; --d) {
    if (data.classes(d).size() != out.reps.size()) break;
    out.stable_since = d;
  }
  if (x.index.size && *x.index.size <= depth && out.stable_since == depth) out.stable_since = depth - 1;
  return out;
}

MorelVerdict morel_equiv_check(const RepProMap<KanBase>& f, long long p, int k_bound, Elem depth) {
  MorelVerdict v;
  v.prime = p;
  v.equivalent = true;
  for (int k = 0; k <= k_bound; ++k) {
    CohomologyData xs{f.source, k, p, {}, {}}, ys{f.target, k, p, {}, {}};
    auto xc = xs.classes(depth);
    auto yc = ys.classes(depth);
    MorelDegree d;
    d.degree = k;
    d.source = pro_cohomology(f.source, p, k, depth).group;
    d.target = pro_cohomology(f.target, p, k, depth).group;
    // f^* on class representatives
    std::vector<int> image;
    for (const auto& [t, c] : yc) {
      auto [s, m] = f.at(t);
      const long long pulled =
          CohomologyData::apply(induced_on_cohomology(m, xs.piece(s), ys.piece(t)), ys.piece(t).q.group(),
                                xs.piece(s).q.group(), c);
      int cls = -1;
      for (std::size_t a = 0; a < xc.size() && cls < 0; ++a)
        if (xs.equivalent(xc[a].first, xc[a].second, s, pulled, depth)) cls = static_cast<int>(a);
      image.push_back(cls);
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    d.bijective = injective && image.size() == xc.size() &&
                  std::find(image.begin(), image.end(), -1) == image.end();
    v.equivalent = v.equivalent && d.bijective;
    v.degrees.push_back(d);
  }
  return v;
}

Pi0Colimit colim_pi0_mapping(const ProObject<KanBase>& x, const TauSSet& y, Elem depth) {
  struct Level {
    MappingSpace ms;
    std::vector<int> comp;  // vertex -> root
  };
  std::map<Elem, Level> levels;
  auto level = [&](Elem i) -> Level& {
    auto it = levels.find(i);
    if (it != levels.end()) return it->second;
    Level l{mapping_space(x.value(i), y, 1), {}};
    DisjointSets ds(l.ms.levels[0].count);
    for (int e = 0; e < l.ms.levels[1].count; ++e)
      ds.unite(l.ms.levels[1].faces[e * 2], l.ms.levels[1].faces[e * 2 + 1]);
    for (int v = 0; v < l.ms.levels[0].count; ++v) l.comp.push_back(ds.find(v));
    return levels.emplace(i, std::move(l)).first->second;
  };
  // component of (vertex v at i) precomposed with X_k -> X_i
  auto pull = [&](Elem k, Elem i, int v) {
    if (k == i) return level(i).comp[v];
    const auto& flat = level(i).ms.maps[0][v];
    const SimplicialMap t = x.transition(k, i);
    const TauSSet xi = x.value(i), xk = x.value(k);
    // the flattened map covers levels 0..top of X_i
    std::vector<int> off{0};
    while (off.back() < static_cast<int>(flat.size())) off.push_back(off.back() + xi.count(static_cast<int>(off.size()) - 1));
    const int top = static_cast<int>(off.size()) - 2;
    std::vector<int> out;
    for (int d = 0; d <= top; ++d)
      for (int a = 0; a < xk.count(d); ++a) out.push_back(flat[off[d] + t(d, a)]);
    const int w = level(k).ms.index_of(0, out);
    if (w < 0) throw InvariantViolation("precomposed map missing from the mapping space");
    return level(k).comp[w];
  };
  auto equivalent = [&](Elem i, int v, Elem j, int w) {
    auto test = [&](Elem m) { return pull(m, i, v) == pull(m, j, w); };
    if (test(x.index.join(i, j))) return true;
    for (Elem m : x.index.fragment(depth))
      if (x.index.leq(i, m) && x.index.leq(j, m) && test(m)) return true;
    return false;
  };
  Pi0Colimit out;
  out.depth = depth;
  for (Elem i : x.index.fragment(depth)) {
    const auto& l = level(i);
    for (int v = 0; v < static_cast<int>(l.comp.size()); ++v) {
      if (l.comp[v] != v) continue;
      bool found = false;
      for (const auto& [j, w] : out.reps)
        if (equivalent(j, w, i, v)) {
          found = true;
          break;
        }
      if (!found) out.reps.emplace_back(i, v);
    }
  }
  return out;
}

QuickReport quick_invariants(const ProObject<KanBase>& x, Elem depth, const std::vector<long long>& coefficients,
                             int k_bound) {
  QuickReport r;
  std::string comps;
  for (Elem i : x.index.fragment(depth)) comps += (comps.empty() ? "" : ",") + std::to_string(pi0(x.value(i)));
  r.entries.emplace_back("pi0 levelwise", comps);
  auto h1 = homology_tower(x, 1).groups;
  std::string hs;
  for (Elem i : x.index.fragment(depth)) hs += (hs.empty() ? "" : ",") + h1.value(i).to_string();
  r.entries.emplace_back("H1 levelwise", hs);
  for (long long m : coefficients)
    for (int k = 0; k <= k_bound; ++k) {
      auto c = pro_cohomology(x, m, k, depth);
      r.entries.emplace_back("H" + std::to_string(k) + "(-;Z/" + std::to_string(m) + ")",
                             c.group.to_string() + " (" + c.stability() + ")");
    }
  return r;
}

}  // namespace procat
