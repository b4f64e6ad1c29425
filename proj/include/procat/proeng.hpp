#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "procat/abgroup.hpp"
#include "procat/fincat.hpp"
#include "procat/homotopy.hpp"
#include "procat/poset.hpp"
#include "procat/search.hpp"

namespace procat {

// ---------------------------------------------------------------------------
// Base categories. Each base is a struct of static functions over Obj/Map.

template <class B>
struct Cone {
  typename B::Obj apex;
  std::vector<typename B::Map> legs;
};

/// Finite diagram for limits: edges (i, j, X_i -> X_j), commuting where
/// they compose.
template <class B>
struct LimitDiagram {
  std::vector<typename B::Obj> objects;
  std::vector<std::tuple<int, int, typename B::Map>> edges;
};

/// f = p ∘ w. `retraction`, when present, is a trivial fibration r with
/// r ∘ w = id certifying w ∈ W.
template <class B>
struct Factorization {
  typename B::Obj mid;
  typename B::Map w, p;
  std::optional<typename B::Map> retraction;
};

/// Map of finite sets {0..src-1} -> {0..tgt-1}.
struct FnMap {
  int src = 0, tgt = 0;
  std::vector<int> v;
  bool operator==(const FnMap&) const = default;
};

/// FinSet: W = bijections, Fib = all maps, f = f ∘ id.
struct FinSetBase {
  using Obj = int;
  using Map = FnMap;
  static std::string name() { return "FinSet"; }
  static Obj dom(const Map& f) { return f.src; }
  static Obj cod(const Map& f) { return f.tgt; }
  static Map id(Obj a);
  static Map compose(const Map& g, const Map& f);
  static bool equal(const Map& f, const Map& g) { return f == g; }
  static std::vector<Map> hom(Obj a, Obj b, std::size_t limit = 1'000'000);
  static bool in_w(const Map& f, const std::optional<Map>& cert = {});
  static bool in_fib(const Map&) { return true; }
  static Factorization<FinSetBase> factor(const Map& f);
  static Cone<FinSetBase> limit(const LimitDiagram<FinSetBase>& d);
  static Cone<FinSetBase> pullback(const Map& f, const Map& g);
  /// The unique map into a limit with the given legs.
  static Map lift(const Cone<FinSetBase>& lim, Obj src, const std::vector<Map>& legs);
  static std::string describe(Obj a) { return "{" + std::to_string(a) + "}"; }
};

bool is_injective(const FnMap& f);
bool is_surjective(const FnMap& f);

/// Homomorphism of finitely generated abelian groups in generator
/// coordinates (torsion generators in invariant-factor order, then free):
/// m is |gens(tgt)| x |gens(src)|, torsion rows reduced.
struct AbHom {
  FinAbGroup src, tgt;
  IntMat m;
};

struct FinAbBase {
  using Obj = FinAbGroup;
  using Map = AbHom;
  static std::string name() { return "Ab"; }
  static Obj dom(const Map& f) { return f.src; }
  static Obj cod(const Map& f) { return f.tgt; }
  static Map id(const Obj& a);
  static Map compose(const Map& g, const Map& f);
  static bool equal(const Map& f, const Map& g);
  /// Throws PreconditionError when Hom is infinite (free source generator,
  /// target with a free summand).
  static std::vector<Map> hom(const Obj& a, const Obj& b, std::size_t limit = 1'000'000);
  static Map make(const Obj& src, const Obj& tgt, IntMat m);
  static bool is_iso(const Map& f);
  static std::string describe(const Obj& a) { return a.to_string(); }
};
/// Number of generators in the coordinate convention above.
int num_gens(const FinAbGroup& a);
/// Order of generator r (0 for free).
long long gen_order(const FinAbGroup& a, int r);

/// Kan complexes: Fib = Kan fibrations, W certified by an isomorphism or a
/// trivial-fibration retraction, factorization through the path object.
struct KanBase {
  using Obj = TauSSet;
  using Map = SimplicialMap;
  static std::string name() { return "Kan"; }
  static Obj dom(const Map& f) { return f.source(); }
  static Obj cod(const Map& f) { return f.target(); }
  static Map id(const Obj& a) { return SimplicialMap::identity(a); }
  static Map compose(const Map& g, const Map& f) { return SimplicialMap::compose(g, f); }
  static bool equal(const Map& f, const Map& g) { return maps_equal(f, g); }
  static std::vector<Map> hom(const Obj& a, const Obj& b, std::size_t limit = 100'000) { return all_maps(a, b, limit); }
  static bool in_w(const Map& f, const std::optional<Map>& cert = {});
  static bool in_fib(const Map& f) { return is_kan_fibration(f).ok; }
  /// f itself when it is a fibration; otherwise X -> X ×_Y Y^{Δ¹} -> Y.
  static Factorization<KanBase> factor(const Map& f);
  static Cone<KanBase> limit(const LimitDiagram<KanBase>& d);
  static Cone<KanBase> pullback(const Map& f, const Map& g);
  static Map lift(const Cone<KanBase>& lim, const Obj& src, const std::vector<Map>& legs);
  static std::string describe(const Obj& a) { return a.name(); }
};

/// Kan complexes up to homotopy: hom lists one map per homotopy class and
/// equality is homotopy (for hom computations into Kan targets only).
struct KanHoBase {
  using Obj = TauSSet;
  using Map = SimplicialMap;
  static std::string name() { return "Ho(Kan)"; }
  static Map id(const Obj& a) { return SimplicialMap::identity(a); }
  static Map compose(const Map& g, const Map& f) { return SimplicialMap::compose(g, f); }
  static bool equal(const Map& f, const Map& g) { return homotopic_maps(f, g); }
  static std::vector<Map> hom(const Obj& a, const Obj& b, std::size_t limit = 100'000);
};

// ---------------------------------------------------------------------------
// Pro-objects over effective posets

template <class B>
struct ProObject {
  using Obj = typename B::Obj;
  using Map = typename B::Map;
  std::string name;
  EffPoset index;
  std::function<Obj(Elem)> value;
  std::function<Map(Elem, Elem)> transition;  // X_i -> X_j for i >= j

  /// Identities at i = i and X(j,k) ∘ X(i,j) = X(i,k) on the fragment.
  void validate(Elem depth) const {
    auto fr = index.fragment(depth);
    for (Elem i : fr) {
      if (!B::equal(transition(i, i), B::id(value(i))))
        throw InvariantViolation(name + ": transition " + index.label(i) + " -> " + index.label(i) + " is not the identity");
      for (Elem j : fr) {
        if (j == i || !index.leq(j, i)) continue;
        for (Elem k : fr) {
          if (k == j || !index.leq(k, j)) continue;
          if (!B::equal(B::compose(transition(j, k), transition(i, j)), transition(i, k)))
            throw InvariantViolation(name + ": transitions do not compose on " + index.label(i) + " >= " +
                                     index.label(j) + " >= " + index.label(k));
        }
      }
    }
  }

  /// Values and transitions memoized (thread safe).
  ProObject cached() const {
    struct Memo {
      std::mutex mu;
      std::map<Elem, Obj> values;
      std::map<std::pair<Elem, Elem>, Map> maps;
    };
    auto memo = std::make_shared<Memo>();
    ProObject out = *this;
    auto v = value;
    auto t = transition;
    out.value = [memo, v](Elem i) {
      {
        std::lock_guard lk(memo->mu);
        auto it = memo->values.find(i);
        if (it != memo->values.end()) return it->second;
      }
      Obj o = v(i);
      std::lock_guard lk(memo->mu);
      return memo->values.emplace(i, std::move(o)).first->second;
    };
    out.transition = [memo, t](Elem i, Elem j) {
      {
        std::lock_guard lk(memo->mu);
        auto it = memo->maps.find({i, j});
        if (it != memo->maps.end()) return it->second;
      }
      Map m = t(i, j);
      std::lock_guard lk(memo->mu);
      return memo->maps.emplace(std::make_pair(i, j), std::move(m)).first->second;
    };
    return out;
  }

  static ProObject constant(const Obj& a, const EffPoset& index, std::string name = "const") {
    return {std::move(name), index, [a](Elem) { return a; }, [a](Elem, Elem) { return B::id(a); }};
  }
};

/// Map in level form: common index, one base map per element.
template <class B>
struct LevelProMap {
  ProObject<B> source, target;
  std::function<typename B::Map(Elem)> at;

  void validate(Elem depth) const {
    for (Elem i : source.index.fragment(depth))
      for (Elem j : source.index.fragment(depth)) {
        if (j == i || !source.index.leq(j, i)) continue;
        if (!B::equal(B::compose(target.transition(i, j), at(i)), B::compose(at(j), source.transition(i, j))))
          throw InvariantViolation("level map is not natural at " + source.index.label(i) + " -> " +
                                   source.index.label(j));
      }
  }
};

/// Map in representative form: target element t -> (s, X_s -> Y_t).
template <class B>
struct RepProMap {
  ProObject<B> source, target;
  std::function<std::pair<Elem, typename B::Map>(Elem)> at;
};

/// (i, f) ~ (j, g) for f : X_i -> Y, g : X_j -> Y: some k above both
/// equalizes them. Tries the join, then fragment elements above both.
template <class B>
bool pairs_equivalent(const ProObject<B>& x, Elem i, const typename B::Map& f, Elem j, const typename B::Map& g,
                      Elem depth) {
  auto test = [&](Elem k) {
    return B::equal(B::compose(f, x.transition(k, i)), B::compose(g, x.transition(k, j)));
  };
  if (test(x.index.join(i, j))) return true;
  for (Elem k : x.index.fragment(depth))
    if (x.index.leq(i, k) && x.index.leq(j, k) && test(k)) return true;
  return false;
}

template <class B>
struct HomClasses {
  Elem depth = 0;
  std::vector<std::pair<Elem, typename B::Map>> reps;  // one per class, first seen
  std::vector<int> class_sizes;
  std::size_t pairs = 0;
  /// Smallest d <= depth whose class set is already the one at depth.
  Elem stable_since = 0;
  /// Two consecutive depths gave identical class sets (a heuristic witness).
  bool stable() const { return stable_since < depth; }
  std::string stability() const {
    return stable() ? "stable-at-depth " + std::to_string(stable_since)
                    : "not stable at depth " + std::to_string(depth);
  }
  int count() const { return static_cast<int>(reps.size()); }
};

namespace detail {

template <class B>
HomClasses<B> hom_classes_at(const ProObject<B>& x, const typename B::Obj& y, Elem depth) {
  HomClasses<B> out;
  out.depth = depth;
  for (Elem i : x.index.fragment(depth))
    for (auto& f : B::hom(x.value(i), y)) {
      ++out.pairs;
      int found = -1;
      for (int c = 0; c < out.count() && found < 0; ++c)
        if (pairs_equivalent(x, out.reps[c].first, out.reps[c].second, i, f, depth)) found = c;
      if (found >= 0) {
        ++out.class_sizes[found];
      } else {
        out.reps.emplace_back(i, std::move(f));
        out.class_sizes.push_back(1);
      }
    }
  return out;
}

}  // namespace detail

/// colim_t Hom(X_t, Y): pairs (i, f) over the first `depth` elements up to
/// equivalence.
template <class B>
HomClasses<B> pro_hom_to_simple(const ProObject<B>& x, const typename B::Obj& y, Elem depth) {
  if (depth < 1) throw PreconditionError("depth must be at least 1");
  HomClasses<B> out = detail::hom_classes_at(x, y, depth);
  // Every class has a representative below d0. A smaller depth with the
  // same number of classes then has the same class set.
  Elem d0 = 1;
  for (const auto& r : out.reps) d0 = std::max(d0, r.first + 1);
  out.stable_since = depth;
  const Elem full = x.index.size ? std::min(*x.index.size, depth) : depth;
  if (full < depth) out.stable_since = full;
  for (Elem d = out.stable_since - 1; d >= d0; --d) {
    if (detail::hom_classes_at(x, y, d).count() != out.count()) break;
    out.stable_since = d;
  }
  if (x.index.size && *x.index.size <= depth && out.stable_since == depth) out.stable_since = depth - 1;
  return out;
}

/// Class index of (i, f) in `classes`, or -1.
template <class B>
int class_of(const ProObject<B>& x, const HomClasses<B>& classes, Elem i, const typename B::Map& f) {
  for (int c = 0; c < classes.count(); ++c)
    if (pairs_equivalent(x, classes.reps[c].first, classes.reps[c].second, i, f, classes.depth)) return c;
  return -1;
}

/// lim_s colim_t Hom(X_t, Y_s) truncated at depth: a class per target
/// element s of Y's fragment, compatible along Y's transitions.
template <class B>
struct ProHom {
  std::vector<Elem> targets;
  std::vector<HomClasses<B>> classes;
  std::vector<std::vector<int>> families;  // families[f][s] = class index
  bool truncated = false;                   // hit the family limit
};

template <class B>
ProHom<B> pro_hom(const ProObject<B>& x, const ProObject<B>& y, Elem depth, std::size_t limit = 100'000) {
  ProHom<B> out;
  out.targets = y.index.fragment(depth);
  const int r = static_cast<int>(out.targets.size());
  for (Elem s : out.targets) out.classes.push_back(pro_hom_to_simple(x, y.value(s), depth));
  // push[a][b][c]: class of Y(a,b) ∘ rep c, for targets b <= a
  std::vector<std::vector<std::vector<int>>> push(r, std::vector<std::vector<int>>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (a == b || !y.index.leq(out.targets[b], out.targets[a])) continue;
      const auto& ca = out.classes[a];
      for (const auto& [i, f] : ca.reps)
        push[a][b].push_back(class_of(x, out.classes[b], i, B::compose(y.transition(out.targets[a], out.targets[b]), f)));
    }
  std::vector<int> cur(r, -1);
  std::function<bool(int)> rec = [&](int a) {
    if (a == r) {
      if (out.families.size() >= limit) {
        out.truncated = true;
        return false;
      }
      out.families.push_back(cur);
      return true;
    }
    for (int c = 0; c < out.classes[a].count(); ++c) {
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        if (!push[a][b].empty() && push[a][b][c] != cur[b]) ok = false;
        if (!push[b][a].empty() && push[b][a][cur[b]] != c) ok = false;
      }
      if (!ok) continue;
      cur[a] = c;
      if (!rec(a + 1)) return false;
    }
    cur[a] = -1;
    return true;
  };
  rec(0);
  return out;
}

/// Index of the family of a representative-form map in `h`, or -1.
template <class B>
int family_of(const ProHom<B>& h, const RepProMap<B>& f) {
  std::vector<int> fam;
  for (std::size_t s = 0; s < h.targets.size(); ++s) {
    auto [i, m] = f.at(h.targets[s]);
    fam.push_back(class_of(f.source, h.classes[s], i, m));
  }
  for (std::size_t k = 0; k < h.families.size(); ++k)
    if (h.families[k] == fam) return static_cast<int>(k);
  return -1;
}

/// g ∘ f in representative form.
template <class B>
RepProMap<B> compose_rep(const RepProMap<B>& g, const RepProMap<B>& f) {
  auto gat = g.at;
  auto fat = f.at;
  return {f.source, g.target, [gat, fat](Elem t) {
            auto [s, gm] = gat(t);
            auto [r, fm] = fat(s);
            return std::make_pair(r, B::compose(gm, fm));
          }};
}

template <class B>
RepProMap<B> identity_rep(const ProObject<B>& x) {
  return {x, x, [x](Elem t) { return std::make_pair(t, B::id(x.value(t))); }};
}

template <class B>
RepProMap<B> level_to_rep(const LevelProMap<B>& f) {
  auto at = f.at;
  return {f.source, f.target, [at](Elem t) { return std::make_pair(t, at(t)); }};
}

/// Compatibility: Y(t,t') ∘ f_t ~ f_t' for t >= t' in the target fragment.
template <class B>
bool rep_compatible(const RepProMap<B>& f, Elem depth) {
  const auto fr = f.target.index.fragment(depth);
  for (Elem t : fr)
    for (Elem u : fr) {
      if (u == t || !f.target.index.leq(u, t)) continue;
      auto [s, m] = f.at(t);
      auto [s2, m2] = f.at(u);
      if (!pairs_equivalent(f.source, s, B::compose(f.target.transition(t, u), m), s2, m2, depth)) return false;
    }
  return true;
}

/// f ~ g as representative maps between the same objects, on the fragment.
template <class B>
bool rep_equal(const RepProMap<B>& f, const RepProMap<B>& g, Elem depth) {
  for (Elem t : f.target.index.fragment(depth)) {
    auto [s, m] = f.at(t);
    auto [s2, m2] = g.at(t);
    if (!pairs_equivalent(f.source, s, m, s2, m2, depth)) return false;
  }
  return true;
}

template <class B>
struct Reindexed {
  ProObject<B> pulled;   // μ*X over J
  RepProMap<B> to;       // X -> μ*X
  RepProMap<B> from;     // μ*X -> X
};

/// μ*X with the witnesses of μ*X ≅ X. μ must reach every element of I's
/// fragment; the search for a preimage above t looks at J's first
/// `search` elements (depth when 0).
template <class B>
Reindexed<B> reindex(const ProObject<B>& x, const PosetMap& mu, Elem depth, Elem search = 0) {
  if (search <= 0) search = depth;
  const EffPoset& I = x.index;
  const EffPoset& J = mu.source;
  const auto jfr = J.fragment(search);
  for (Elem a : jfr)
    for (Elem b : jfr)
      if (J.leq(a, b) && !I.leq(mu.map(a), mu.map(b)))
        throw PreconditionError("reindexing map is not monotone at " + J.label(a) + " <= " + J.label(b));
  std::map<Elem, Elem> above;
  for (Elem t : I.fragment(depth)) {
    for (Elem j : jfr)
      if (I.leq(t, mu.map(j))) {
        above[t] = j;
        break;
      }
    if (!above.count(t))
      throw PreconditionError("not coinitial: " + I.label(t) + " unreachable within " + std::to_string(search) +
                              " elements");
  }
  Reindexed<B> out;
  auto m = mu.map;
  auto xv = x.value;
  auto xt = x.transition;
  out.pulled = {x.name + "*", J, [m, xv](Elem j) { return xv(m(j)); },
                [m, xt](Elem j, Elem k) { return xt(m(j), m(k)); }};
  out.to = {x, out.pulled, [m, xv](Elem j) { return std::make_pair(m(j), B::id(xv(m(j)))); }};
  out.from = {out.pulled, x, [above, m, xt, I, J, search](Elem t) {
                auto it = above.find(t);
                Elem j = -1;
                if (it != above.end()) {
                  j = it->second;
                } else {
                  for (Elem c : J.fragment(search))
                    if (I.leq(t, m(c))) {
                      j = c;
                      break;
                    }
                  if (j < 0) throw PreconditionError("not coinitial: " + I.label(t) + " unreachable");
                }
                return std::make_pair(j, xt(m(j), t));
              }};
  if (!rep_compatible(out.to, depth) || !rep_compatible(out.from, depth))
    throw InvariantViolation("reindexing witnesses are not compatible");
  if (!rep_equal(compose_rep(out.from, out.to), identity_rep(x), depth) ||
      !rep_equal(compose_rep(out.to, out.from), identity_rep(out.pulled), depth))
    throw InvariantViolation("reindexing witnesses do not compose to identities");
  return out;
}

// ---------------------------------------------------------------------------
// Diagrams over finite posets, Lw/Sp classes, factorization

template <class B>
struct Diagram {
  using Obj = typename B::Obj;
  using Map = typename B::Map;
  FinPoset shape;
  std::vector<Obj> objects;
  std::vector<std::optional<Map>> trans;  // [i * n + j] for j < i

  int size() const { return shape.size(); }
  const Map& at(int i, int j) const {
    const auto& m = trans[static_cast<std::size_t>(i) * size() + j];
    if (!m) throw PreconditionError("no transition " + shape.elements[i] + " -> " + shape.elements[j]);
    return *m;
  }
  void set(int i, int j, Map m) { trans[static_cast<std::size_t>(i) * size() + j] = std::move(m); }
  static Diagram empty_over(const FinPoset& p) {
    Diagram d;
    d.shape = p;
    d.objects.resize(p.size());
    d.trans.resize(static_cast<std::size_t>(p.size()) * p.size());
    return d;
  }
  void validate() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!shape.lt(j, i)) continue;
        for (int k = 0; k < n; ++k)
          if (shape.lt(k, j) && !B::equal(B::compose(at(j, k), at(i, j)), at(i, k)))
            throw InvariantViolation("diagram transitions do not compose at " + shape.elements[i]);
      }
  }
};

/// Elements in Reedy order (increasing degree, then index).
std::vector<int> reedy_order(const FinPoset& p);
/// {j | j < i} in increasing index order.
std::vector<int> strict_downset(const FinPoset& p, int i);

template <class B>
struct LevelMap {
  Diagram<B> source, target;
  std::vector<typename B::Map> at;
  void validate() const {
    const int n = source.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (source.shape.lt(j, i) &&
            !B::equal(B::compose(target.at(i, j), at[i]), B::compose(at[j], source.at(i, j))))
          throw InvariantViolation("level map is not natural at " + source.shape.elements[i]);
  }
};

/// lim over {j < i} of X with its legs, one per element of `down`. When the
/// downset has a maximum d the limit is X_d itself.
template <class B>
Cone<B> matching_object(const Diagram<B>& x, int i, const std::vector<int>& down) {
  for (int d : down) {
    bool top = true;
    for (int e : down)
      if (!x.shape.le(e, d)) top = false;
    if (!top) continue;
    Cone<B> c{x.objects[d], {}};
    for (int e : down) c.legs.push_back(e == d ? B::id(x.objects[d]) : x.at(d, e));
    return c;
  }
  (void)i;
  LimitDiagram<B> ld;
  for (int d : down) ld.objects.push_back(x.objects[d]);
  for (std::size_t a = 0; a < down.size(); ++a)
    for (std::size_t b = 0; b < down.size(); ++b)
      if (x.shape.lt(down[b], down[a]))
        ld.edges.emplace_back(static_cast<int>(a), static_cast<int>(b), x.at(down[a], down[b]));
  return B::limit(ld);
}

template <class B>
struct RelativeMatching {
  std::vector<int> down;
  Cone<B> mx, my;          // matching objects of source and target
  Cone<B> pullback;        // Y_i ×_{M_iY} M_iX with legs to Y_i and M_iX
  typename B::Map map;     // X_i -> pullback
};

/// X_i -> Y_i ×_{M_iY} M_iX for a level map f.
template <class B>
RelativeMatching<B> relative_matching(const LevelMap<B>& f, int i) {
  RelativeMatching<B> r;
  r.down = strict_downset(f.source.shape, i);
  r.mx = matching_object(f.source, i, r.down);
  r.my = matching_object(f.target, i, r.down);
  std::vector<typename B::Map> mf_legs, xi_legs;
  for (std::size_t a = 0; a < r.down.size(); ++a) {
    mf_legs.push_back(B::compose(f.at[r.down[a]], r.mx.legs[a]));
    xi_legs.push_back(f.source.at(i, r.down[a]));
  }
  auto mf = B::lift(r.my, r.mx.apex, mf_legs);
  auto yi_to_m = B::lift(r.my, f.target.objects[i], [&] {
    std::vector<typename B::Map> legs;
    for (int d : r.down) legs.push_back(f.target.at(i, d));
    return legs;
  }());
  r.pullback = B::pullback(yi_to_m, mf);
  auto xi_to_mx = B::lift(r.mx, f.source.objects[i], xi_legs);
  r.map = B::lift(r.pullback, f.source.objects[i], {f.at[i], xi_to_mx});
  return r;
}

struct ClassVerdict {
  bool ok = true;
  std::vector<char> per_element;
  int first_failure = -1;
};

template <class B, class Pred>
ClassVerdict is_levelwise(const LevelMap<B>& f, Pred&& in_class) {
  ClassVerdict v;
  for (int i = 0; i < f.source.size(); ++i) {
    const bool ok = in_class(f.at[i]);
    v.per_element.push_back(ok);
    if (!ok && v.ok) {
      v.ok = false;
      v.first_failure = i;
    }
  }
  return v;
}

template <class B, class Pred>
ClassVerdict is_special(const LevelMap<B>& f, Pred&& in_class) {
  ClassVerdict v;
  for (int i = 0; i < f.source.size(); ++i) {
    const bool ok = in_class(relative_matching(f, i).map);
    v.per_element.push_back(ok);
    if (!ok && v.ok) {
      v.ok = false;
      v.first_failure = i;
    }
  }
  return v;
}

template <class B>
struct DiagramFactorization {
  LevelMap<B> g, h;  // f = h ∘ g
  std::vector<std::optional<typename B::Map>> certificates;  // W certificates for g
};

/// f = h ∘ g with g levelwise W and h special Fib, by induction along the
/// Reedy order: Z_i comes from factoring X_i -> Y_i ×_{M_iY} M_iZ.
template <class B>
DiagramFactorization<B> factorize_diagram(const LevelMap<B>& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  const int n = x.size();
  auto z = Diagram<B>::empty_over(x.shape);
  std::vector<std::optional<typename B::Map>> gi(n), hi(n), certs(n);
  for (int i : reedy_order(x.shape)) {
    auto down = strict_downset(x.shape, i);
    Cone<B> mz = matching_object(z, i, down);
    Cone<B> my = matching_object(y, i, down);
    std::vector<typename B::Map> hz_legs, yi_legs, xz_legs;
    for (std::size_t a = 0; a < down.size(); ++a) {
      hz_legs.push_back(B::compose(*hi[down[a]], mz.legs[a]));
      yi_legs.push_back(y.at(i, down[a]));
      xz_legs.push_back(B::compose(*gi[down[a]], x.at(i, down[a])));
    }
    auto mh = B::lift(my, mz.apex, hz_legs);
    auto yi_to_m = B::lift(my, y.objects[i], yi_legs);
    Cone<B> pb = B::pullback(yi_to_m, mh);
    auto xi_to_mz = B::lift(mz, x.objects[i], xz_legs);
    auto q = B::lift(pb, x.objects[i], {f.at[i], xi_to_mz});
    auto fac = B::factor(q);
    z.objects[i] = fac.mid;
    gi[i] = fac.w;
    certs[i] = fac.retraction;
    hi[i] = B::compose(pb.legs[0], fac.p);
    auto to_mz = B::compose(pb.legs[1], fac.p);
    for (std::size_t a = 0; a < down.size(); ++a) z.set(i, down[a], B::compose(mz.legs[a], to_mz));
  }
  DiagramFactorization<B> out;
  out.g.source = x;
  out.g.target = z;
  out.h.source = z;
  out.h.target = y;
  for (int i = 0; i < n; ++i) {
    out.g.at.push_back(*gi[i]);
    out.h.at.push_back(*hi[i]);
  }
  out.certificates = std::move(certs);
  return out;
}

struct FactorizationCheck {
  bool diagram_valid = false;
  bool round_trip = false;
  bool g_levelwise_w = false;
  bool h_special_fib = false;
  bool h_levelwise_fib = false;
  std::string failure;
  bool ok() const { return diagram_valid && round_trip && g_levelwise_w && h_special_fib && h_levelwise_fib; }
};

/// Independent recheck of every output property of factorize_diagram.
template <class B>
FactorizationCheck check_factorization(const LevelMap<B>& f, const DiagramFactorization<B>& r) {
  FactorizationCheck c;
  try {
    r.g.target.validate();
    r.g.validate();
    r.h.validate();
    c.diagram_valid = true;
  } catch (const InvariantViolation& e) {
    c.failure = e.what();
    return c;
  }
  c.round_trip = true;
  for (int i = 0; i < f.source.size(); ++i)
    if (!B::equal(B::compose(r.h.at[i], r.g.at[i]), f.at[i])) {
      c.round_trip = false;
      c.failure = "h∘g != f at " + f.source.shape.elements[i];
    }
  int k = 0;
  c.g_levelwise_w = is_levelwise(r.g, [&](const typename B::Map& m) { return B::in_w(m, r.certificates[k++]); }).ok;
  if (!c.g_levelwise_w && c.failure.empty()) c.failure = "g is not levelwise W";
  c.h_special_fib = is_special(r.h, [](const typename B::Map& m) { return B::in_fib(m); }).ok;
  if (!c.h_special_fib && c.failure.empty()) c.failure = "h is not special Fib";
  c.h_levelwise_fib = is_levelwise(r.h, [](const typename B::Map& m) { return B::in_fib(m); }).ok;
  if (!c.h_levelwise_fib && c.failure.empty()) c.failure = "h is not levelwise Fib";
  return c;
}

// ---------------------------------------------------------------------------
// Generators and snapshots

/// Random poset on 1..max_size elements (random DAG closed transitively).
FinPoset random_poset(std::mt19937_64& rng, int max_size);
/// Random FinSet diagram: each Y_i gets 0..max_extra points over a random
/// map to its matching object (at least one point where possible).
Diagram<FinSetBase> random_finset_diagram(const FinPoset& shape, std::mt19937_64& rng, int max_set = 3);

enum class FinSetClass { Surjective, Injective, Bijective };
bool in_finset_class(const FnMap& f, FinSetClass c);
std::string to_string(FinSetClass c);
/// A natural map X -> Y built along the Reedy order by choosing X_i with a
/// map X_i -> Y_i ×_{M_iY} M_iX. With `forced`, that map is drawn from the
/// class (so the result is special for it); otherwise it is arbitrary.
LevelMap<FinSetBase> random_finset_map(const Diagram<FinSetBase>& y, std::mt19937_64& rng,
                                       std::optional<FinSetClass> forced, int max_extra = 2);

/// Random level map of Kan towers over a chain of 1..max_len elements
/// whose target transitions are Kan fibrations. Objects come from a small
/// pool (point, K(S,0) on two points, B(Z/2)).
LevelMap<KanBase> random_kan_map(std::mt19937_64& rng, int max_len = 3);

/// Finite snapshot of the canonical indexing category C_{X/}: objects
/// (c, class of X -> c) for the listed finite sets c, morphisms the maps
/// c -> c' carrying one class to the other.
struct IndexingSnapshot {
  FinCategory category;
  std::vector<std::pair<int, int>> objects;  // (set size, class index)
};
IndexingSnapshot canonical_indexing_snapshot(const ProObject<FinSetBase>& x, const std::vector<int>& sets,
                                             Elem depth);

}  // namespace procat
