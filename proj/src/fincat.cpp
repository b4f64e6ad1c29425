#include "procat/fincat.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <tuple>

namespace procat {

namespace {

std::size_t at(std::size_t g, std::size_t f, std::size_t m) { return g * m + f; }

}  // namespace

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (dom[f] == a && cod[f] == b) out.push_back(f);
  return out;
}

int FinCategory::object_index(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) throw PreconditionError("unknown object " + name);
  return static_cast<int>(it - objects.begin());
}

int FinCategory::morphism_index(const std::string& name) const {
  auto it = std::find(morphisms.begin(), morphisms.end(), name);
  if (it == morphisms.end()) throw PreconditionError("unknown morphism " + name);
  return static_cast<int>(it - morphisms.begin());
}

void FinCategory::validate() const {
  const std::size_t m = morphisms.size();
  const int n = num_objects();
  if (dom.size() != m || cod.size() != m || identity.size() != objects.size() || comp.size() != m * m)
    throw InvariantViolation("category tables have inconsistent sizes");
  for (std::size_t f = 0; f < m; ++f)
    if (dom[f] < 0 || dom[f] >= n || cod[f] < 0 || cod[f] >= n)
      throw InvariantViolation("morphism " + morphisms[f] + " has dom/cod out of range");
  for (int o = 0; o < n; ++o) {
    int i = identity[o];
    if (i < 0 || i >= static_cast<int>(m) || dom[i] != o || cod[i] != o)
      throw InvariantViolation("identity of " + objects[o] + " is not an endomorphism of it");
  }
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      int gf = comp[at(g, f, m)];
      if (cod[f] != dom[g]) {
        if (gf != -1) throw InvariantViolation("composite of non-composable " + morphisms[g] + ", " + morphisms[f]);
        continue;
      }
      if (gf < 0 || gf >= static_cast<int>(m))
        throw InvariantViolation("composite " + morphisms[g] + " o " + morphisms[f] + " missing");
      if (dom[gf] != dom[f] || cod[gf] != cod[g])
        throw InvariantViolation("composite " + morphisms[g] + " o " + morphisms[f] + " has wrong dom/cod");
    }
  for (std::size_t f = 0; f < m; ++f) {
    if (comp[at(identity[cod[f]], f, m)] != static_cast<int>(f) || comp[at(f, identity[dom[f]], m)] != static_cast<int>(f))
      throw InvariantViolation("identities are not units for " + morphisms[f]);
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g) {
      if (cod[g] != dom[h]) continue;
      const int hg = comp[at(h, g, m)];
      for (std::size_t f = 0; f < m; ++f) {
        if (cod[f] != dom[g]) continue;
        if (comp[at(hg, f, m)] != comp[at(h, comp[at(g, f, m)], m)])
          throw InvariantViolation("associativity fails on " + morphisms[h] + ", " + morphisms[g] + ", " + morphisms[f]);
      }
    }
}

std::string FinCategory::content_hash() const {
  std::string s = "fincat;";
  for (const auto& o : objects) s += o + ",";
  s += ";";
  for (int f = 0; f < num_morphisms(); ++f)
    s += morphisms[f] + ":" + std::to_string(dom[f]) + ">" + std::to_string(cod[f]) + ",";
  s += ";";
  for (int c : comp) s += std::to_string(c) + ",";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

FinCategory FinCategory::terminal() { return discrete({"*"}); }

FinCategory FinCategory::discrete(const std::vector<std::string>& names) { return build(names, {}, {}); }

FinCategory FinCategory::from_group(const FinGroup& g) {
  FinCategory c;
  c.objects = {"*"};
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    c.morphisms.push_back("g" + std::to_string(a));
    c.dom.push_back(0);
    c.cod.push_back(0);
  }
  c.identity = {g.identity()};
  c.comp.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.comp[at(a, b, n)] = g.mul(a, b);
  return c;
}

FinCategory FinCategory::idempotent() { return build({"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}); }

FinCategory FinCategory::parallel_pair() {
  return build({"x", "y"}, {{"alpha", "x", "y"}, {"beta", "x", "y"}}, {});
}

FinCategory FinCategory::build(const std::vector<std::string>& objects,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& composites) {
  FinCategory c;
  c.objects = objects;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    c.morphisms.push_back("id_" + objects[o]);
    c.dom.push_back(static_cast<int>(o));
    c.cod.push_back(static_cast<int>(o));
    c.identity.push_back(static_cast<int>(o));
  }
  for (const auto& [name, d, t] : arrows) {
    c.morphisms.push_back(name);
    c.dom.push_back(c.object_index(d));
    c.cod.push_back(c.object_index(t));
  }
  const std::size_t m = c.morphisms.size();
  c.comp.assign(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (c.cod[f] != c.dom[g]) continue;
      if (c.is_identity(static_cast<int>(g)))
        c.comp[at(g, f, m)] = static_cast<int>(f);
      else if (c.is_identity(static_cast<int>(f)))
        c.comp[at(g, f, m)] = static_cast<int>(g);
    }
  for (const auto& [g, f, gf] : composites)
    c.comp[at(c.morphism_index(g), c.morphism_index(f), m)] = c.morphism_index(gf);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      if (c.cod[f] == c.dom[g] && c.comp[at(g, f, m)] < 0)
        throw PreconditionError("composite " + c.morphisms[g] + " o " + c.morphisms[f] + " not given");
  c.validate();
  return c;
}

FinCategory FinCategory::product(const FinCategory& a, const FinCategory& b) {
  FinCategory c;
  const int na = a.num_objects(), nb = b.num_objects();
  const int ma = a.num_morphisms(), mb = b.num_morphisms();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      c.objects.push_back("(" + a.objects[i] + "," + b.objects[j] + ")");
      c.identity.push_back(a.identity[i] * mb + b.identity[j]);
    }
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g) {
      c.morphisms.push_back("(" + a.morphisms[f] + "," + b.morphisms[g] + ")");
      c.dom.push_back(a.dom[f] * nb + b.dom[g]);
      c.cod.push_back(a.cod[f] * nb + b.cod[g]);
    }
  const std::size_t m = c.morphisms.size();
  c.comp.assign(m * m, -1);
  for (int f2 = 0; f2 < ma; ++f2)
    for (int f1 = 0; f1 < ma; ++f1) {
      int f = a.compose(f2, f1);
      if (f < 0) continue;
      for (int g2 = 0; g2 < mb; ++g2)
        for (int g1 = 0; g1 < mb; ++g1) {
          int g = b.compose(g2, g1);
          if (g < 0) continue;
          c.comp[at(f2 * mb + g2, f1 * mb + g1, m)] = f * mb + g;
        }
    }
  return c;
}

FinCategory FinCategory::opposite(const FinCategory& c) {
  FinCategory o = c;
  std::swap(o.dom, o.cod);
  const std::size_t m = c.morphisms.size();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) o.comp[at(g, f, m)] = c.comp[at(f, g, m)];
  return o;
}

FinCategory FinCategory::left_cone(const FinCategory& e) {
  FinCategory c;
  const int n = e.num_objects(), me = e.num_morphisms();
  c.objects = e.objects;
  c.objects.push_back("cone");
  c.morphisms = e.morphisms;
  c.dom = e.dom;
  c.cod = e.cod;
  c.identity = e.identity;
  c.identity.push_back(me);
  c.morphisms.push_back("id_cone");
  c.dom.push_back(n);
  c.cod.push_back(n);
  for (int o = 0; o < n; ++o) {
    c.morphisms.push_back("leg_" + e.objects[o]);
    c.dom.push_back(n);
    c.cod.push_back(o);
  }
  const std::size_t m = c.morphisms.size();
  c.comp.assign(m * m, -1);
  for (int g = 0; g < me; ++g)
    for (int f = 0; f < me; ++f) c.comp[at(g, f, m)] = e.compose(g, f);
  c.comp[at(me, me, m)] = me;
  for (int o = 0; o < n; ++o) {
    const int leg = me + 1 + o;
    c.comp[at(leg, me, m)] = leg;
    for (int g = 0; g < me; ++g)
      if (e.dom[g] == o) c.comp[at(g, leg, m)] = me + 1 + e.cod[g];
  }
  return c;
}

// ---------------------------------------------------------------------------

void FinFunctor::validate() const {
  source.validate();
  target.validate();
  if (on_objects.size() != source.objects.size() || on_morphisms.size() != source.morphisms.size())
    throw InvariantViolation("functor tables have wrong sizes");
  for (int o : on_objects)
    if (o < 0 || o >= target.num_objects()) throw InvariantViolation("functor object image out of range");
  for (int f = 0; f < source.num_morphisms(); ++f) {
    int Ff = on_morphisms[f];
    if (Ff < 0 || Ff >= target.num_morphisms()) throw InvariantViolation("functor morphism image out of range");
    if (target.dom[Ff] != on_objects[source.dom[f]] || target.cod[Ff] != on_objects[source.cod[f]])
      throw InvariantViolation("functor does not preserve dom/cod at " + source.morphisms[f]);
  }
  for (int o = 0; o < source.num_objects(); ++o)
    if (on_morphisms[source.identity[o]] != target.identity[on_objects[o]])
      throw InvariantViolation("functor does not preserve the identity of " + source.objects[o]);
  for (int g = 0; g < source.num_morphisms(); ++g)
    for (int f = 0; f < source.num_morphisms(); ++f) {
      int gf = source.compose(g, f);
      if (gf < 0) continue;
      if (on_morphisms[gf] != target.compose(on_morphisms[g], on_morphisms[f]))
        throw InvariantViolation("functor does not preserve " + source.morphisms[g] + " o " + source.morphisms[f]);
    }
}

FinFunctor FinFunctor::identity(const FinCategory& c) {
  FinFunctor f{c, c, {}, {}};
  for (int o = 0; o < c.num_objects(); ++o) f.on_objects.push_back(o);
  for (int m = 0; m < c.num_morphisms(); ++m) f.on_morphisms.push_back(m);
  return f;
}

FinFunctor FinFunctor::compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.source, g.target, {}, {}};
  for (int o : f.on_objects) h.on_objects.push_back(g.on_objects[o]);
  for (int m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
  return h;
}

FinFunctor FinFunctor::full_inclusion(const FinCategory& c, const std::vector<int>& objs) {
  std::vector<int> new_obj(c.num_objects(), -1);
  FinCategory s;
  FinFunctor inc;
  for (int o : objs) {
    new_obj[o] = s.num_objects();
    s.objects.push_back(c.objects[o]);
    inc.on_objects.push_back(o);
  }
  std::vector<int> new_mor(c.num_morphisms(), -1);
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (new_obj[c.dom[f]] < 0 || new_obj[c.cod[f]] < 0) continue;
    new_mor[f] = s.num_morphisms();
    s.morphisms.push_back(c.morphisms[f]);
    s.dom.push_back(new_obj[c.dom[f]]);
    s.cod.push_back(new_obj[c.cod[f]]);
    inc.on_morphisms.push_back(f);
  }
  for (int o : objs) s.identity.push_back(new_mor[c.identity[o]]);
  const std::size_t m = s.morphisms.size();
  s.comp.assign(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      int gf = c.compose(inc.on_morphisms[g], inc.on_morphisms[f]);
      if (gf >= 0) s.comp[at(g, f, m)] = new_mor[gf];
    }
  inc.source = std::move(s);
  inc.target = c;
  return inc;
}

FinFunctor FinFunctor::projection(const FinCategory& a, const FinCategory& b) {
  FinFunctor p{FinCategory::product(a, b), a, {}, {}};
  for (int i = 0; i < a.num_objects(); ++i)
    for (int j = 0; j < b.num_objects(); ++j) p.on_objects.push_back(i);
  for (int f = 0; f < a.num_morphisms(); ++f)
    for (int g = 0; g < b.num_morphisms(); ++g) p.on_morphisms.push_back(f);
  return p;
}

// ---------------------------------------------------------------------------

void FinPoset::validate() const {
  const int n = size();
  if (leq.size() != static_cast<std::size_t>(n) * n) throw InvariantViolation("poset relation has wrong size");
  for (int a = 0; a < n; ++a) {
    if (!le(a, a)) throw InvariantViolation("poset not reflexive at " + elements[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw InvariantViolation("poset not antisymmetric at " + elements[a] + ", " + elements[b]);
      if (!le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c))
          throw InvariantViolation("poset not transitive at " + elements[a] + ", " + elements[b] + ", " + elements[c]);
    }
  }
}

FinPoset FinPoset::from_relation(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& le_pairs) {
  FinPoset p;
  p.elements = std::move(elements);
  const std::size_t n = p.elements.size();
  p.leq.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) p.leq[a * n + a] = 1;
  for (auto [a, b] : le_pairs) p.leq[static_cast<std::size_t>(a) * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (p.leq[k * n + b]) p.leq[a * n + b] = 1;
  p.validate();
  return p;
}

FinPoset FinPoset::chain(int k) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return from_relation(std::move(names), rel);
}

FinPoset FinPoset::discrete(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::to_string(i));
  return from_relation(std::move(names), {});
}

FinPoset FinPoset::divisors(long long n) {
  std::vector<long long> ds;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    names.push_back(std::to_string(ds[i]));
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (ds[j] % ds[i] == 0) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return from_relation(std::move(names), rel);
}

FinPoset FinPoset::divisibility_upto(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = i; j <= n; j += i) rel.emplace_back(i - 1, j - 1);
  }
  return from_relation(std::move(names), rel);
}

int FinPoset::morphism(int u, int v) const {
  if (!le(v, u)) return -1;
  int idx = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (!le(b, a)) continue;
      if (a == u && b == v) return idx;
      ++idx;
    }
  return -1;
}

FinCategory FinPoset::as_category() const {
  FinCategory c;
  c.objects = elements;
  const int n = size();
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  c.identity.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!le(b, a)) continue;
      index[static_cast<std::size_t>(a) * n + b] = c.num_morphisms();
      if (a == b) c.identity[a] = c.num_morphisms();
      c.morphisms.push_back(a == b ? "id_" + elements[a] : elements[a] + ">" + elements[b]);
      c.dom.push_back(a);
      c.cod.push_back(b);
    }
  const std::size_t m = c.morphisms.size();
  c.comp.assign(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      if (c.cod[f] == c.dom[g]) c.comp[at(g, f, m)] = index[static_cast<std::size_t>(c.dom[f]) * n + c.cod[g]];
  return c;
}

// ---------------------------------------------------------------------------

CofilteredVerdict check_cofiltered(const FinCategory& c) {
  CofilteredVerdict v;
  const int n = c.num_objects();
  if (n == 0) {
    v.ok = false;
    v.axiom = 1;
    v.message = "axiom (1): category is empty";
    return v;
  }
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);  // [src * n + dst]
  for (int f = 0; f < c.num_morphisms(); ++f) reach[static_cast<std::size_t>(c.dom[f]) * n + c.cod[f]] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool found = false;
      for (int s = 0; s < n && !found; ++s)
        found = reach[static_cast<std::size_t>(s) * n + a] && reach[static_cast<std::size_t>(s) * n + b];
      if (!found) {
        v.ok = false;
        v.axiom = 2;
        v.witnesses = {a, b};
        v.message = "axiom (2): no common source for (" + c.objects[a] + ", " + c.objects[b] + ")";
        return v;
      }
    }
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = f + 1; g < c.num_morphisms(); ++g) {
      if (c.dom[f] != c.dom[g] || c.cod[f] != c.cod[g]) continue;
      bool found = false;
      for (int h = 0; h < c.num_morphisms() && !found; ++h)
        found = c.cod[h] == c.dom[f] && c.compose(f, h) == c.compose(g, h);
      if (!found) {
        v.ok = false;
        v.axiom = 3;
        v.witnesses = {f, g};
        v.message = "axiom (3): parallel pair (" + c.morphisms[f] + ", " + c.morphisms[g] + ") is not equalized";
        return v;
      }
    }
  return v;
}

CofilteredVerdict check_filtered(const FinCategory& c) { return check_cofiltered(FinCategory::opposite(c)); }

bool is_cone(const FinFunctor& f, int apex, const std::vector<int>& legs) {
  const FinCategory& e = f.source;
  const FinCategory& i = f.target;
  if (static_cast<int>(legs.size()) != e.num_objects()) return false;
  for (int o = 0; o < e.num_objects(); ++o)
    if (i.dom[legs[o]] != apex || i.cod[legs[o]] != f.on_objects[o]) return false;
  for (int g = 0; g < e.num_morphisms(); ++g)
    if (i.compose(f.on_morphisms[g], legs[e.dom[g]]) != legs[e.cod[g]]) return false;
  return true;
}

ConeExtension cone_extension(const FinFunctor& f) {
  const FinCategory& e = f.source;
  const FinCategory& cat = f.target;
  if (cat.num_objects() == 0) throw PreconditionError("cone extension: axiom (1) fails, target is empty");
  ConeExtension out;
  const int n = e.num_objects();
  out.legs.assign(n, -1);
  out.apex = n > 0 ? f.on_objects[0] : 0;
  if (n > 0) out.legs[0] = cat.identity[out.apex];
  // phase 1: common sources
  for (int o = 1; o < n; ++o) {
    const int x = f.on_objects[o];
    int u = -1, w = -1;
    for (int s = 0; s < cat.num_objects() && u < 0; ++s) {
      auto h1 = cat.hom(s, out.apex), h2 = cat.hom(s, x);
      if (!h1.empty() && !h2.empty()) {
        u = h1[0];
        w = h2[0];
      }
    }
    if (u < 0)
      throw PreconditionError("cone extension: axiom (2) fails for (" + cat.objects[out.apex] + ", " + cat.objects[x] + ")");
    for (int p = 0; p < o; ++p) out.legs[p] = cat.compose(out.legs[p], u);
    out.legs[o] = w;
    out.apex = cat.dom[u];
  }
  // phase 2: equalize F(g)∘f_e against f_e'
  for (int g = 0; g < e.num_morphisms(); ++g) {
    const int a = cat.compose(f.on_morphisms[g], out.legs[e.dom[g]]);
    const int b = out.legs[e.cod[g]];
    if (a == b) continue;
    int h = -1;
    for (int k = 0; k < cat.num_morphisms() && h < 0; ++k)
      if (cat.cod[k] == out.apex && cat.compose(a, k) == cat.compose(b, k)) h = k;
    if (h < 0)
      throw PreconditionError("cone extension: axiom (3) fails for (" + cat.morphisms[a] + ", " + cat.morphisms[b] + ")");
    for (int& l : out.legs) l = cat.compose(l, h);
    out.apex = cat.dom[h];
  }
  FinFunctor ext{FinCategory::left_cone(e), cat, f.on_objects, f.on_morphisms};
  ext.on_objects.push_back(out.apex);
  ext.on_morphisms.push_back(cat.identity[out.apex]);
  for (int l : out.legs) ext.on_morphisms.push_back(l);
  out.extended = std::move(ext);
  return out;
}

namespace {

// Comma category with objects (c, φ) for φ in `arrows(c)` and morphisms
// u : c -> c' accepted by `commutes(u, φ, φ')`.
template <class Arrows, class Commutes>
CommaCategory build_comma(const FinFunctor& F, Arrows arrows, Commutes commutes) {
  const FinCategory& c = F.source;
  const FinCategory& d = F.target;
  CommaCategory out;
  std::vector<std::vector<int>> objs_of(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x)
    for (int phi : arrows(x)) {
      objs_of[x].push_back(static_cast<int>(out.objects.size()));
      out.objects.emplace_back(x, phi);
      out.category.objects.push_back("(" + c.objects[x] + "," + d.morphisms[phi] + ")");
    }
  std::map<std::tuple<int, int, int>, int> index;  // (u, src, dst)
  out.category.identity.assign(out.objects.size(), -1);
  for (int u = 0; u < c.num_morphisms(); ++u)
    for (int s : objs_of[c.dom[u]])
      for (int t : objs_of[c.cod[u]]) {
        if (!commutes(u, out.objects[s].second, out.objects[t].second)) continue;
        const int id = out.category.num_morphisms();
        index[{u, s, t}] = id;
        if (c.is_identity(u) && s == t) out.category.identity[s] = id;
        out.category.morphisms.push_back(c.morphisms[u] + ":" + out.category.objects[s] + "->" + out.category.objects[t]);
        out.category.dom.push_back(s);
        out.category.cod.push_back(t);
        out.underlying.push_back(u);
      }
  const std::size_t m = out.category.morphisms.size();
  out.category.comp.assign(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (out.category.cod[f] != out.category.dom[g]) continue;
      const int u = c.compose(out.underlying[g], out.underlying[f]);
      out.category.comp[at(g, f, m)] = index.at({u, out.category.dom[f], out.category.cod[g]});
    }
  return out;
}

}  // namespace

CommaCategory comma_over(const FinFunctor& F, int dobj) {
  const FinCategory& d = F.target;
  return build_comma(
      F, [&](int x) { return d.hom(F.on_objects[x], dobj); },
      [&](int u, int phi, int psi) { return d.compose(psi, F.on_morphisms[u]) == phi; });
}

CommaCategory comma_under(const FinFunctor& F, int dobj) {
  const FinCategory& d = F.target;
  return build_comma(
      F, [&](int x) { return d.hom(dobj, F.on_objects[x]); },
      [&](int u, int phi, int psi) { return d.compose(F.on_morphisms[u], phi) == psi; });
}

int connected_components(const FinCategory& c) {
  DisjointSets ds(c.num_objects());
  for (int f = 0; f < c.num_morphisms(); ++f) ds.unite(c.dom[f], c.cod[f]);
  return ds.count_roots();
}

bool is_connected(const FinCategory& c, int depth) {
  const int n = c.num_objects();
  if (n == 0) return false;
  if (depth <= 0) return connected_components(c) == 1;
  std::vector<std::vector<int>> adj(n);
  for (int f = 0; f < c.num_morphisms(); ++f) {
    adj[c.dom[f]].push_back(c.cod[f]);
    adj[c.cod[f]].push_back(c.dom[f]);
  }
  std::vector<int> dist(n, -1);
  std::deque<int> q{0};
  dist[0] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dist[x] == depth) continue;
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return std::all_of(dist.begin(), dist.end(), [](int v) { return v >= 0; });
}

std::string CofinalityVerdict::label() const {
  if (!all) return "no";
  return certified ? "yes (certified)" : "yes (classical only)";
}

namespace {

template <class Comma>
CofinalityVerdict check_commas(const FinFunctor& f, int depth, bool certified, Comma comma) {
  CofinalityVerdict v;
  v.all = true;
  v.certified = certified;
  for (int j = 0; j < f.target.num_objects(); ++j) {
    CommaCategory cc = comma(f, j);
    CommaVerdict cv;
    cv.object = j;
    cv.nonempty = cc.category.num_objects() > 0;
    cv.connected = cv.nonempty && is_connected(cc.category, depth);
    v.all = v.all && cv.connected;
    v.per_object.push_back(cv);
  }
  return v;
}

}  // namespace

CofinalityVerdict check_coinitial_classical(const FinFunctor& f, int depth) {
  return check_commas(f, depth, check_cofiltered(f.source).ok, comma_over);
}

CofinalityVerdict check_cofinal_classical(const FinFunctor& f, int depth) {
  return check_commas(f, depth, check_filtered(f.source).ok, comma_under);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::vector<int>>> nerve_chains(const FinCategory& c, int dim_bound) {
  const int top = std::max(dim_bound, 3);
  std::vector<std::vector<std::vector<int>>> chains(top + 1);
  for (int o = 0; o < c.num_objects(); ++o) chains[0].push_back({o});
  for (int f = 0; f < c.num_morphisms(); ++f) chains[1].push_back({f});
  for (int k = 2; k <= top; ++k)
    for (const auto& ch : chains[k - 1])
      for (int f = 0; f < c.num_morphisms(); ++f)
        if (c.dom[f] == c.cod[ch.back()]) {
          auto nc = ch;
          nc.push_back(f);
          chains[k].push_back(std::move(nc));
        }
  return chains;
}

TauSSet nerve(const FinCategory& c, int dim_bound) {
  if (dim_bound < 2) throw PreconditionError("nerve needs dim_bound >= 2");
  auto chains = nerve_chains(c, dim_bound);
  const int top = static_cast<int>(chains.size()) - 1;
  std::vector<std::map<std::vector<int>, int>> index(top + 1);
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < chains[k].size(); ++i) index[k][chains[k][i]] = static_cast<int>(i);
  auto vertex = [&](const std::vector<int>& ch, int k, int i) {
    if (k == 0) return ch[0];
    return i == 0 ? c.dom[ch[0]] : c.cod[ch[i - 1]];
  };
  Truncated t(top + 1);
  for (int k = 0; k <= top; ++k) t[k].count = static_cast<int>(chains[k].size());
  for (int k = 1; k <= top; ++k) {
    auto& lv = t[k];
    lv.faces.reserve(chains[k].size() * (k + 1));
    for (const auto& ch : chains[k])
      for (int i = 0; i <= k; ++i) {
        if (k == 1) {
          lv.faces.push_back(i == 0 ? c.cod[ch[0]] : c.dom[ch[0]]);
          continue;
        }
        std::vector<int> f;
        for (int j = 0; j < k; ++j) {
          if ((i == 0 && j == 0) || (i == k && j == k - 1)) continue;
          if (i > 0 && i < k && j == i - 1) {
            f.push_back(c.compose(ch[i], ch[i - 1]));
            ++j;
            continue;
          }
          f.push_back(ch[j]);
        }
        lv.faces.push_back(index[k - 1].at(f));
      }
    const std::size_t nlo = chains[k - 1].size();
    lv.degens.resize(nlo * k);
    for (int i = 0; i < k; ++i)
      for (std::size_t y = 0; y < nlo; ++y) {
        const auto& ch = chains[k - 1][y];
        std::vector<int> nc;
        if (k == 1) {
          nc = {c.identity[ch[0]]};
        } else {
          nc = ch;
          nc.insert(nc.begin() + i, c.identity[vertex(ch, k - 1, i)]);
        }
        lv.degens[i * nlo + y] = index[k].at(nc);
      }
  }
  return TauSSet(std::move(t), 2, "N(" + std::to_string(c.num_objects()) + "obj)");
}

// ---------------------------------------------------------------------------

void SetFunctor::validate(const FinCategory& c) const {
  if (static_cast<int>(sets.size()) != c.num_objects() || static_cast<int>(maps.size()) != c.num_morphisms())
    throw InvariantViolation("set functor has wrong sizes");
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const int from = contravariant ? c.cod[f] : c.dom[f];
    const int to = contravariant ? c.dom[f] : c.cod[f];
    if (static_cast<int>(maps[f].size()) != sets[from]) throw InvariantViolation("set functor map has wrong size");
    for (int v : maps[f])
      if (v < 0 || v >= sets[to]) throw InvariantViolation("set functor map value out of range");
    if (c.is_identity(f))
      for (int x = 0; x < sets[from]; ++x)
        if (maps[f][x] != x) throw InvariantViolation("set functor moves elements along an identity");
  }
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      const int gf = c.compose(g, f);
      if (gf < 0) continue;
      const int a = contravariant ? g : f, b = contravariant ? f : g;  // apply a then b
      for (std::size_t x = 0; x < maps[gf].size(); ++x)
        if (maps[gf][x] != maps[b][maps[a][x]])
          throw InvariantViolation("set functor does not preserve " + c.morphisms[g] + " o " + c.morphisms[f]);
    }
}

SetFunctor SetFunctor::constant(const FinCategory& c, int size) {
  SetFunctor h;
  h.sets.assign(c.num_objects(), size);
  std::vector<int> id(size);
  for (int x = 0; x < size; ++x) id[x] = x;
  h.maps.assign(c.num_morphisms(), id);
  return h;
}

SetFunctor SetFunctor::representable_contra(const FinCategory& c, int d) {
  SetFunctor h;
  h.contravariant = true;
  std::vector<std::vector<int>> homs(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) {
    homs[x] = c.hom(x, d);
    h.sets.push_back(static_cast<int>(homs[x].size()));
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    std::vector<int> m;
    for (int phi : homs[c.cod[f]]) {
      int comp = c.compose(phi, f);
      m.push_back(static_cast<int>(std::find(homs[c.dom[f]].begin(), homs[c.dom[f]].end(), comp) - homs[c.dom[f]].begin()));
    }
    h.maps.push_back(std::move(m));
  }
  return h;
}

SetFunctor SetFunctor::pull_back(const FinFunctor& f) const {
  SetFunctor h;
  h.contravariant = contravariant;
  for (int o : f.on_objects) h.sets.push_back(sets[o]);
  for (int m : f.on_morphisms) h.maps.push_back(maps[m]);
  return h;
}

Grothendieck grothendieck_set(const FinCategory& c, const SetFunctor& h) {
  h.validate(c);
  Grothendieck g;
  std::vector<int> obase(c.num_objects() + 1, 0);
  for (int o = 0; o < c.num_objects(); ++o) {
    obase[o + 1] = obase[o] + h.sets[o];
    for (int x = 0; x < h.sets[o]; ++x) {
      g.objects.emplace_back(o, x);
      g.category.objects.push_back(c.objects[o] + "." + std::to_string(x));
    }
  }
  // morphism (u, x) with x in H(dom u) (covariant) or H(cod u) (contravariant)
  std::vector<int> mbase(c.num_morphisms() + 1, 0);
  for (int u = 0; u < c.num_morphisms(); ++u) {
    const int carrier = h.contravariant ? c.cod[u] : c.dom[u];
    mbase[u + 1] = mbase[u] + h.sets[carrier];
    for (int x = 0; x < h.sets[carrier]; ++x) {
      const int y = h.maps[u][x];
      const int s = h.contravariant ? obase[c.dom[u]] + y : obase[c.dom[u]] + x;
      const int t = h.contravariant ? obase[c.cod[u]] + x : obase[c.cod[u]] + y;
      g.category.morphisms.push_back(c.morphisms[u] + "." + std::to_string(x));
      g.category.dom.push_back(s);
      g.category.cod.push_back(t);
    }
  }
  g.category.identity.resize(g.objects.size());
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    auto [o, x] = g.objects[i];
    g.category.identity[i] = mbase[c.identity[o]] + x;
  }
  const std::size_t m = g.category.morphisms.size();
  g.category.comp.assign(m * m, -1);
  auto owner = [&](int mor) {
    int u = static_cast<int>(std::upper_bound(mbase.begin(), mbase.end(), mor) - mbase.begin()) - 1;
    return std::pair{u, mor - mbase[u]};
  };
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t a = 0; a < m; ++a) {
      if (g.category.cod[a] != g.category.dom[b]) continue;
      auto [ua, xa] = owner(static_cast<int>(a));
      auto [ub, xb] = owner(static_cast<int>(b));
      const int u = c.compose(ub, ua);
      g.category.comp[at(b, a, m)] = mbase[u] + (h.contravariant ? xb : xa);
    }
  return g;
}

std::vector<int> reedy_degree(const FinPoset& t) {
  t.validate();
  const int n = t.size();
  std::vector<int> below(n, 0), order(n), deg(n, 0);
  for (int a = 0; a < n; ++a) {
    order[a] = a;
    for (int b = 0; b < n; ++b)
      if (t.lt(b, a)) ++below[a];
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  for (int a : order) {
    int d = -1;
    for (int b = 0; b < n; ++b)
      if (t.lt(b, a)) d = std::max(d, deg[b]);
    deg[a] = d + 1;
  }
  return deg;
}

}  // namespace procat
