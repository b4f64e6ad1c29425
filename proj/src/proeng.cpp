#include "procat/proeng.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "procat/eilmac.hpp"

namespace procat {

// ---------------------------------------------------------------------------
// FinSet

FnMap FinSetBase::id(Obj a) {
  FnMap f{a, a, std::vector<int>(a)};
  std::iota(f.v.begin(), f.v.end(), 0);
  return f;
}

FnMap FinSetBase::compose(const Map& g, const Map& f) {
  if (f.tgt != g.src) throw PreconditionError("composing maps with mismatched ends");
  FnMap h{f.src, g.tgt, std::vector<int>(f.src)};
  for (int x = 0; x < f.src; ++x) h.v[x] = g.v[f.v[x]];
  return h;
}

std::vector<FnMap> FinSetBase::hom(Obj a, Obj b, std::size_t limit) {
  std::vector<FnMap> out;
  if (a > 0 && b == 0) return out;
  long long total = 1;
  for (int i = 0; i < a; ++i) {
    total *= b;
    if (static_cast<std::size_t>(total) > limit) throw BudgetExceeded("too many maps of finite sets");
  }
  for (long long c = 0; c < total; ++c) out.push_back({a, b, decode_uniform(c, std::max(b, 1), a)});
  return out;
}

bool is_injective(const FnMap& f) {
  std::vector<char> seen(f.tgt, 0);
  for (int y : f.v) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool is_surjective(const FnMap& f) {
  std::vector<char> seen(f.tgt, 0);
  for (int y : f.v) seen[y] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool FinSetBase::in_w(const Map& f, const std::optional<Map>&) { return f.src == f.tgt && is_injective(f); }

Factorization<FinSetBase> FinSetBase::factor(const Map& f) { return {f.src, id(f.src), f, std::nullopt}; }

Cone<FinSetBase> FinSetBase::limit(const LimitDiagram<FinSetBase>& d) {
  const int r = static_cast<int>(d.objects.size());
  // edges checked as soon as both ends are assigned
  std::vector<std::vector<int>> ready(r);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    auto& [i, j, m] = d.edges[e];
    if (m.src != d.objects[i] || m.tgt != d.objects[j]) throw PreconditionError("limit diagram edge has wrong ends");
    ready[std::max(i, j)].push_back(e);
  }
  Cone<FinSetBase> c;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(r);
  std::function<void(int)> rec = [&](int t) {
    if (t == r) {
      tuples.push_back(cur);
      if (tuples.size() > global_budget().max_simplices_per_level) throw BudgetExceeded("finite limit too large");
      return;
    }
    for (int v = 0; v < d.objects[t]; ++v) {
      cur[t] = v;
      bool ok = true;
      for (int e : ready[t]) {
        auto& [i, j, m] = d.edges[e];
        if (m.v[cur[i]] != cur[j]) {
          ok = false;
          break;
        }
      }
      if (ok) rec(t + 1);
    }
  };
  rec(0);
  c.apex = static_cast<int>(tuples.size());
  for (int a = 0; a < r; ++a) {
    FnMap leg{c.apex, d.objects[a], {}};
    for (const auto& tu : tuples) leg.v.push_back(tu[a]);
    c.legs.push_back(std::move(leg));
  }
  return c;
}

Cone<FinSetBase> FinSetBase::pullback(const Map& f, const Map& g) {
  if (f.tgt != g.tgt) throw PreconditionError("pullback legs have different targets");
  Cone<FinSetBase> c;
  FnMap p1{0, f.src, {}}, p2{0, g.src, {}};
  for (int a = 0; a < f.src; ++a)
    for (int b = 0; b < g.src; ++b)
      if (f.v[a] == g.v[b]) {
        p1.v.push_back(a);
        p2.v.push_back(b);
      }
  c.apex = static_cast<int>(p1.v.size());
  p1.src = p2.src = c.apex;
  c.legs = {p1, p2};
  return c;
}

FnMap FinSetBase::lift(const Cone<FinSetBase>& lim, Obj src, const std::vector<Map>& legs) {
  if (legs.size() != lim.legs.size()) throw PreconditionError("wrong number of legs");
  std::unordered_map<std::vector<int>, int, TupleHash> at;
  for (int t = 0; t < lim.apex; ++t) {
    std::vector<int> key;
    for (const auto& l : lim.legs) key.push_back(l.v[t]);
    at.emplace(std::move(key), t);
  }
  FnMap f{src, lim.apex, std::vector<int>(src)};
  for (int x = 0; x < src; ++x) {
    std::vector<int> key;
    for (const auto& l : legs) key.push_back(l.v[x]);
    auto it = at.find(key);
    if (it == at.end()) throw PreconditionError("legs do not form a cone over the diagram");
    f.v[x] = it->second;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

int num_gens(const FinAbGroup& a) { return static_cast<int>(a.invariant_factors().size()) + a.free_rank(); }

long long gen_order(const FinAbGroup& a, int r) {
  const auto& f = a.invariant_factors();
  return r < static_cast<int>(f.size()) ? f[r] : 0;
}

AbHom FinAbBase::make(const Obj& src, const Obj& tgt, IntMat m) {
  const int ns = num_gens(src), nt = num_gens(tgt);
  if (m.rows != nt || m.cols != ns) throw PreconditionError("homomorphism matrix has the wrong shape");
  for (int r = 0; r < nt; ++r) {
    const long long d = gen_order(tgt, r);
    for (int j = 0; j < ns; ++j) {
      if (d > 0) m(r, j) = mod_ll(m(r, j), d);
      const long long o = gen_order(src, j);
      if (o == 0) continue;
      const bool killed = d > 0 ? mod_ll(o * m(r, j), d) == 0 : m(r, j) == 0;
      if (!killed)
        throw InvariantViolation("not a homomorphism: generator " + std::to_string(j) + " of order " +
                                 std::to_string(o) + " is not killed");
    }
  }
  return {src, tgt, std::move(m)};
}

AbHom FinAbBase::id(const Obj& a) { return make(a, a, IntMat::identity(num_gens(a))); }

AbHom FinAbBase::compose(const Map& g, const Map& f) {
  if (!(f.tgt == g.src)) throw PreconditionError("composing homomorphisms with mismatched ends");
  return make(f.src, g.tgt, multiply(g.m, f.m));
}

bool FinAbBase::equal(const Map& f, const Map& g) { return f.src == g.src && f.tgt == g.tgt && f.m.a == g.m.a; }

std::vector<AbHom> FinAbBase::hom(const Obj& a, const Obj& b, std::size_t limit) {
  const int ns = num_gens(a), nt = num_gens(b);
  // per source generator, the admissible images
  std::vector<std::vector<std::vector<long long>>> choices(ns);
  for (int j = 0; j < ns; ++j) {
    const long long o = gen_order(a, j);
    std::vector<std::vector<long long>> col{{}};
    for (int r = 0; r < nt; ++r) {
      const long long d = gen_order(b, r);
      std::vector<long long> vals;
      if (d == 0) {
        if (o == 0) throw PreconditionError("Hom from a free summand to a free summand is infinite");
        vals = {0};
      } else {
        const long long step = o == 0 ? 1 : d / gcd_ll(d, o);
        for (long long v = 0; v < d; v += step) vals.push_back(v);
      }
      std::vector<std::vector<long long>> next;
      for (const auto& c : col)
        for (long long v : vals) {
          next.push_back(c);
          next.back().push_back(v);
        }
      col = std::move(next);
    }
    choices[j] = std::move(col);
  }
  std::vector<AbHom> out;
  std::vector<int> pick(ns, 0);
  while (true) {
    IntMat m(nt, ns);
    for (int j = 0; j < ns; ++j)
      for (int r = 0; r < nt; ++r) m(r, j) = choices[j][pick[j]][r];
    out.push_back({a, b, std::move(m)});
    if (out.size() > limit) throw BudgetExceeded("too many homomorphisms");
    int j = 0;
    while (j < ns && ++pick[j] == static_cast<int>(choices[j].size())) pick[j++] = 0;
    if (j == ns) break;
  }
  return out;
}

bool FinAbBase::is_iso(const Map& f) {
  if (f.src.free_rank() != f.tgt.free_rank()) return false;
  const int ts = static_cast<int>(f.src.invariant_factors().size());
  const int tt = static_cast<int>(f.tgt.invariant_factors().size());
  // block triangular: torsion part and free part must both be invertible
  FinAbGroup ts_g(f.src.invariant_factors()), tt_g(f.tgt.invariant_factors());
  const long long os = ts_g.order(), ot = tt_g.order();
  if (os != ot) return false;
  std::vector<char> hit(static_cast<std::size_t>(ot), 0);
  for (long long x = 0; x < os; ++x) {
    auto c = ts_g.decode(x);
    std::vector<long long> y(tt, 0);
    for (int r = 0; r < tt; ++r) {
      for (int j = 0; j < ts; ++j) y[r] += f.m(r, j) * c[j];
      y[r] = mod_ll(y[r], gen_order(f.tgt, r));
    }
    const long long code = tt_g.encode(y);
    if (hit[code]) return false;
    hit[code] = 1;
  }
  const int fr = f.src.free_rank();
  if (fr == 0) return true;
  IntMat block(fr, fr);
  for (int r = 0; r < fr; ++r)
    for (int j = 0; j < fr; ++j) block(r, j) = f.m(tt + r, ts + j);
  Snf s = smith_normal_form(block, false);
  if (s.rank != fr) return false;
  return std::all_of(s.diag.begin(), s.diag.end(), [](const BigInt& d) { return d == 1; });
}

// ---------------------------------------------------------------------------
// Kan complexes

bool KanBase::in_w(const Map& f, const std::optional<Map>& cert) {
  if (is_isomorphism(f)) return true;
  if (!cert) return false;
  return is_trivial_fibration(*cert).ok && maps_equal(SimplicialMap::compose(*cert, f), id(f.source()));
}

Factorization<KanBase> KanBase::factor(const Map& f) {
  if (in_fib(f)) return {f.source(), id(f.source()), f, std::nullopt};
  PathObject po = path_object(f.target());
  Pullback e = procat::pullback(f, po.ev0);
  SimplicialMap w = pullback_pair(e, id(f.source()), SimplicialMap::compose(po.constant, f));
  SimplicialMap p = SimplicialMap::compose(po.ev1, e.pr2);
  return {e.object, w, p, e.pr1};
}

Cone<KanBase> KanBase::limit(const LimitDiagram<KanBase>& d) {
  FinDiagram fd{d.objects, d.edges};
  DiagramLimit l = diagram_limit(fd);
  return {l.object, l.projections};
}

Cone<KanBase> KanBase::pullback(const Map& f, const Map& g) {
  Pullback p = procat::pullback(f, g);
  return {p.object, {p.pr1, p.pr2}};
}

SimplicialMap KanBase::lift(const Cone<KanBase>& lim, const Obj& src, const std::vector<Map>& legs) {
  if (legs.size() != lim.legs.size()) throw PreconditionError("wrong number of legs");
  const int top = std::max(lim.apex.cosk_level(), src.cosk_level());
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= top; ++k) {
    std::unordered_map<std::vector<int>, int, TupleHash> at;
    for (int t = 0; t < lim.apex.count(k); ++t) {
      std::vector<int> key;
      for (const auto& l : lim.legs) key.push_back(l(k, t));
      at.emplace(std::move(key), t);
    }
    std::vector<int> v(src.count(k));
    for (int x = 0; x < src.count(k); ++x) {
      std::vector<int> key;
      for (const auto& l : legs) key.push_back(l(k, x));
      auto it = at.find(key);
      if (it == at.end()) throw PreconditionError("legs do not form a cone over the diagram");
      v[x] = it->second;
    }
    lv.push_back(std::move(v));
  }
  return SimplicialMap(src, lim.apex, std::move(lv));
}

std::vector<SimplicialMap> KanHoBase::hom(const Obj& a, const Obj& b, std::size_t limit) {
  std::vector<SimplicialMap> reps;
  for (auto& f : all_maps(a, b, limit)) {
    bool seen = false;
    for (const auto& r : reps)
      if (homotopic_maps(r, f)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(std::move(f));
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Diagram helpers

std::vector<int> reedy_order(const FinPoset& p) {
  auto deg = reedy_degree(p);
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  return order;
}

std::vector<int> strict_downset(const FinPoset& p, int i) {
  std::vector<int> out;
  for (int j = 0; j < p.size(); ++j)
    if (p.lt(j, i)) out.push_back(j);
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

FnMap random_fn(std::mt19937_64& rng, int src, int tgt) {
  FnMap f{src, tgt, std::vector<int>(src)};
  for (int& y : f.v) y = uniform(rng, 0, tgt - 1);
  return f;
}

FnMap random_in_class(std::mt19937_64& rng, int tgt, FinSetClass c, int max_extra) {
  std::vector<int> perm(tgt);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  switch (c) {
    case FinSetClass::Bijective:
      return {tgt, tgt, perm};
    case FinSetClass::Injective: {
      const int n = uniform(rng, 0, tgt);
      return {n, tgt, std::vector<int>(perm.begin(), perm.begin() + n)};
    }
    case FinSetClass::Surjective: {
      const int extra = tgt == 0 ? 0 : uniform(rng, 0, max_extra);
      FnMap f{tgt + extra, tgt, perm};
      for (int e = 0; e < extra; ++e) f.v.push_back(uniform(rng, 0, tgt - 1));
      return f;
    }
  }
  return {};
}

}  // namespace

FinPoset random_poset(std::mt19937_64& rng, int max_size) {
  const int n = uniform(rng, 1, max_size);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  std::bernoulli_distribution edge(0.3);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(rng)) rel.emplace_back(a, b);
  return FinPoset::from_relation(std::move(names), rel);
}

Diagram<FinSetBase> random_finset_diagram(const FinPoset& shape, std::mt19937_64& rng, int max_set) {
  auto y = Diagram<FinSetBase>::empty_over(shape);
  for (int i : reedy_order(shape)) {
    auto down = strict_downset(shape, i);
    auto m = matching_object(y, i, down);
    const int n = m.apex == 0 ? 0 : uniform(rng, 1, max_set);
    FnMap to_m = random_fn(rng, n, m.apex);
    y.objects[i] = n;
    for (std::size_t a = 0; a < down.size(); ++a) y.set(i, down[a], FinSetBase::compose(m.legs[a], to_m));
  }
  return y;
}

bool in_finset_class(const FnMap& f, FinSetClass c) {
  switch (c) {
    case FinSetClass::Surjective:
      return is_surjective(f);
    case FinSetClass::Injective:
      return is_injective(f);
    case FinSetClass::Bijective:
      return is_injective(f) && is_surjective(f);
  }
  return false;
}

std::string to_string(FinSetClass c) {
  switch (c) {
    case FinSetClass::Surjective:
      return "surjective";
    case FinSetClass::Injective:
      return "injective";
    case FinSetClass::Bijective:
      return "bijective";
  }
  return "?";
}

LevelMap<FinSetBase> random_finset_map(const Diagram<FinSetBase>& y, std::mt19937_64& rng,
                                       std::optional<FinSetClass> forced, int max_extra) {
  using B = FinSetBase;
  auto x = Diagram<B>::empty_over(y.shape);
  std::vector<FnMap> f(y.size());
  for (int i : reedy_order(y.shape)) {
    auto down = strict_downset(y.shape, i);
    auto mx = matching_object(x, i, down);
    auto my = matching_object(y, i, down);
    std::vector<FnMap> mf_legs, yi_legs;
    for (std::size_t a = 0; a < down.size(); ++a) {
      mf_legs.push_back(B::compose(f[down[a]], mx.legs[a]));
      yi_legs.push_back(y.at(i, down[a]));
    }
    auto pb = B::pullback(B::lift(my, y.objects[i], yi_legs), B::lift(my, mx.apex, mf_legs));
    FnMap u = forced ? random_in_class(rng, pb.apex, *forced, max_extra)
                     : random_fn(rng, pb.apex == 0 ? 0 : uniform(rng, 0, std::min(pb.apex + max_extra, 4)), pb.apex);
    x.objects[i] = u.src;
    f[i] = B::compose(pb.legs[0], u);
    for (std::size_t a = 0; a < down.size(); ++a)
      x.set(i, down[a], B::compose(mx.legs[a], B::compose(pb.legs[1], u)));
  }
  return {x, y, f};
}

LevelMap<KanBase> random_kan_map(std::mt19937_64& rng, int max_len) {
  using B = KanBase;
  static const std::vector<TauSSet> pool = {
      point().renamed("pt"), discrete(2).renamed("K(S,0):2"), b_group(FinGroup::cyclic(2)).renamed("B(Z/2)")};
  const int len = uniform(rng, 1, max_len);
  FinPoset shape = FinPoset::chain(len);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw BudgetExceeded("random Kan tower generation did not converge");
    auto x = Diagram<B>::empty_over(shape), y = Diagram<B>::empty_over(shape);
    std::vector<SimplicialMap> f(len);
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      x.objects[i] = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
      y.objects[i] = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
      if (i > 0) {
        auto xm = B::hom(x.objects[i], x.objects[i - 1]);
        std::vector<SimplicialMap> ym;
        for (auto& m : B::hom(y.objects[i], y.objects[i - 1]))
          if (B::in_fib(m)) ym.push_back(std::move(m));
        if (xm.empty() || ym.empty()) {
          ok = false;
          break;
        }
        x.set(i, i - 1, xm[uniform(rng, 0, static_cast<int>(xm.size()) - 1)]);
        y.set(i, i - 1, ym[uniform(rng, 0, static_cast<int>(ym.size()) - 1)]);
        for (int j = i - 2; j >= 0; --j) {
          x.set(i, j, B::compose(x.at(i - 1, j), x.at(i, i - 1)));
          y.set(i, j, B::compose(y.at(i - 1, j), y.at(i, i - 1)));
        }
      }
      std::vector<SimplicialMap> cand;
      for (auto& m : B::hom(x.objects[i], y.objects[i]))
        if (i == 0 || B::equal(B::compose(y.at(i, i - 1), m), B::compose(f[i - 1], x.at(i, i - 1))))
          cand.push_back(std::move(m));
      if (cand.empty()) {
        ok = false;
        break;
      }
      f[i] = cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)];
    }
    if (ok) return {x, y, f};
  }
}

IndexingSnapshot canonical_indexing_snapshot(const ProObject<FinSetBase>& x, const std::vector<int>& sets,
                                             Elem depth) {
  using B = FinSetBase;
  IndexingSnapshot snap;
  std::vector<HomClasses<B>> classes;
  for (int c : sets) classes.push_back(pro_hom_to_simple(x, c, depth));
  std::vector<std::string> objs;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (int k = 0; k < classes[a].count(); ++k) {
      snap.objects.emplace_back(static_cast<int>(a), k);
      objs.push_back("(" + std::to_string(sets[a]) + "," + std::to_string(k) + ")");
    }
  FinCategory& cat = snap.category;
  cat.objects = objs;
  const int no = static_cast<int>(objs.size());
  // morphisms: (source object, target object, underlying map)
  std::vector<std::tuple<int, int, FnMap>> mor;
  for (int s = 0; s < no; ++s) {
    auto [a, k] = snap.objects[s];
    const auto& [i, rep] = classes[a].reps[k];
    for (int t = 0; t < no; ++t) {
      auto [b, l] = snap.objects[t];
      for (auto& u : B::hom(sets[a], sets[b]))
        if (class_of(x, classes[b], i, B::compose(u, rep)) == l) mor.emplace_back(s, t, std::move(u));
    }
  }
  const int nm = static_cast<int>(mor.size());
  cat.identity.assign(no, -1);
  for (int m = 0; m < nm; ++m) {
    auto& [s, t, u] = mor[m];
    cat.morphisms.push_back(objs[s] + "->" + objs[t] + ":" + [&] {
      std::string v;
      for (int e : u.v) v += std::to_string(e);
      return v;
    }());
    cat.dom.push_back(s);
    cat.cod.push_back(t);
    if (s == t && u == B::id(sets[snap.objects[s].first])) cat.identity[s] = m;
  }
  cat.comp.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (std::get<1>(mor[f]) != std::get<0>(mor[g])) continue;
      FnMap gf = B::compose(std::get<2>(mor[g]), std::get<2>(mor[f]));
      for (int h = 0; h < nm; ++h)
        if (std::get<0>(mor[h]) == std::get<0>(mor[f]) && std::get<1>(mor[h]) == std::get<1>(mor[g]) &&
            std::get<2>(mor[h]) == gf)
          cat.comp[static_cast<std::size_t>(g) * nm + f] = h;
    }
  cat.validate();
  return snap;
}

}  // namespace procat
