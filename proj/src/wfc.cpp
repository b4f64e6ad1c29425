#include "procat/wfc.hpp"

#include <algorithm>
#include <set>

namespace procat {

MorphismClass class_from_names(const FinCategory& c, const std::vector<std::string>& names) {
  MorphismClass m(c.num_morphisms(), 0);
  for (const auto& n : names) m[c.morphism_index(n)] = 1;
  return m;
}

MorphismClass isomorphisms(const FinCategory& c) {
  MorphismClass m(c.num_morphisms(), 0);
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g : c.hom(c.cod[f], c.dom[f]))
      if (c.compose(g, f) == c.identity[c.dom[f]] && c.compose(f, g) == c.identity[c.cod[f]]) m[f] = 1;
  return m;
}

MorphismClass all_morphisms(const FinCategory& c) { return MorphismClass(c.num_morphisms(), 1); }

std::string wfc_axiom_name(int axiom) {
  switch (axiom) {
    case 0:
      return "subcategories containing all isomorphisms";
    case 1:
      return "finite limits";
    case 2:
      return "two-out-of-three";
    case 3:
      return "closed under base change";
    case 4:
      return "factorization";
  }
  return "none";
}

bool is_terminal(const FinCategory& c, int t) {
  for (int x = 0; x < c.num_objects(); ++x)
    if (c.hom(x, t).size() != 1) return false;
  return true;
}

bool is_product(const FinCategory& c, int pa, int pb) {
  if (c.dom[pa] != c.dom[pb]) return false;
  const int p = c.dom[pa];
  for (int x = 0; x < c.num_objects(); ++x) {
    std::set<std::pair<int, int>> seen;
    for (int u : c.hom(x, p)) seen.emplace(c.compose(pa, u), c.compose(pb, u));
    const auto hp = c.hom(x, p);
    if (seen.size() != hp.size()) return false;  // not injective
    if (seen.size() != c.hom(x, c.cod[pa]).size() * c.hom(x, c.cod[pb]).size()) return false;
  }
  return true;
}

bool is_equalizer(const FinCategory& c, int e, int f, int g) {
  if (c.cod[e] != c.dom[f] || c.compose(f, e) != c.compose(g, e)) return false;
  for (int x = 0; x < c.num_objects(); ++x) {
    std::vector<int> eq;
    for (int h : c.hom(x, c.dom[f]))
      if (c.compose(f, h) == c.compose(g, h)) eq.push_back(h);
    std::set<int> seen;
    for (int u : c.hom(x, c.dom[e])) seen.insert(c.compose(e, u));
    if (seen.size() != c.hom(x, c.dom[e]).size() || seen.size() != eq.size()) return false;
  }
  return true;
}

bool is_pullback(const FinCategory& c, int p, int g, int q1, int q2) {
  if (c.dom[q1] != c.dom[q2] || c.cod[q1] != c.dom[p] || c.cod[q2] != c.dom[g]) return false;
  if (c.compose(p, q1) != c.compose(g, q2)) return false;
  const int apex = c.dom[q1];
  for (int x = 0; x < c.num_objects(); ++x) {
    std::size_t cones = 0;
    for (int u : c.hom(x, c.dom[p]))
      for (int v : c.hom(x, c.dom[g]))
        if (c.compose(p, u) == c.compose(g, v)) ++cones;
    std::set<std::pair<int, int>> seen;
    for (int h : c.hom(x, apex)) seen.emplace(c.compose(q1, h), c.compose(q2, h));
    if (seen.size() != c.hom(x, apex).size() || seen.size() != cones) return false;
  }
  return true;
}

namespace {

WfcVerdict fail(int axiom, std::string message, std::vector<std::string> witnesses) {
  WfcVerdict v;
  v.ok = false;
  v.axiom = axiom;
  v.axiom_name = wfc_axiom_name(axiom);
  v.message = std::move(message);
  v.witnesses = std::move(witnesses);
  return v;
}

}  // namespace

WfcVerdict wfc_check(const FinCategory& c, const MorphismClass& w, const MorphismClass& fib) {
  c.validate();
  const int nm = c.num_morphisms(), no = c.num_objects();
  if (static_cast<int>(w.size()) != nm || static_cast<int>(fib.size()) != nm)
    throw PreconditionError("morphism classes must have one flag per morphism");
  const auto& M = c.morphisms;
  const MorphismClass iso = isomorphisms(c);

  // 0: subcategories containing the isomorphisms
  for (auto [cls, name] : {std::pair{&w, "W"}, std::pair{&fib, "Fib"}}) {
    for (int f = 0; f < nm; ++f)
      if (iso[f] && !(*cls)[f]) return fail(0, std::string(name) + " misses the isomorphism " + M[f], {M[f]});
    for (int g = 0; g < nm; ++g)
      for (int f = 0; f < nm; ++f) {
        const int gf = c.compose(g, f);
        if (gf >= 0 && (*cls)[f] && (*cls)[g] && !(*cls)[gf])
          return fail(0, std::string(name) + " is not closed under composition", {M[f], M[g], M[gf]});
      }
  }

  // 1: finite limits
  {
    bool term = false;
    for (int t = 0; t < no && !term; ++t) term = is_terminal(c, t);
    if (!term) return fail(1, "no terminal object", {});
    for (int a = 0; a < no; ++a)
      for (int b = a; b < no; ++b) {
        bool found = false;
        for (int p = 0; p < no && !found; ++p)
          for (int pa : c.hom(p, a)) {
            for (int pb : c.hom(p, b))
              if (is_product(c, pa, pb)) {
                found = true;
                break;
              }
            if (found) break;
          }
        if (!found) return fail(1, "no product of " + c.objects[a] + " and " + c.objects[b], {c.objects[a], c.objects[b]});
      }
    for (int f = 0; f < nm; ++f)
      for (int g = f + 1; g < nm; ++g) {
        if (c.dom[f] != c.dom[g] || c.cod[f] != c.cod[g]) continue;
        bool found = false;
        for (int e = 0; e < nm && !found; ++e) found = is_equalizer(c, e, f, g);
        if (!found) return fail(1, "no equalizer of " + M[f] + " and " + M[g], {M[f], M[g]});
      }
  }

  // 2: two-out-of-three on every composable pair
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      const int gf = c.compose(g, f);
      if (gf < 0) continue;
      const int in = (w[f] ? 1 : 0) + (w[g] ? 1 : 0) + (w[gf] ? 1 : 0);
      if (in == 2)
        return fail(2, "W fails two-out-of-three on the triangle " + M[g] + " ∘ " + M[f] + " = " + M[gf],
                    {M[f], M[g], M[gf]});
    }

  // 3: base change of Fib and Fib ∩ W along every map, every pullback square
  for (int p = 0; p < nm; ++p) {
    if (!fib[p]) continue;
    for (int g = 0; g < nm; ++g) {
      if (c.cod[g] != c.cod[p]) continue;
      for (int q1 = 0; q1 < nm; ++q1)
        for (int q2 = 0; q2 < nm; ++q2) {
          if (!is_pullback(c, p, g, q1, q2)) continue;
          if (!fib[q2])
            return fail(3, "fibration " + M[p] + " pulled back along " + M[g] + " gives " + M[q2] + ", not in Fib",
                        {M[p], M[g], M[q2]});
          if (w[p] && !w[q2])
            return fail(3, "trivial fibration " + M[p] + " pulled back along " + M[g] + " gives " + M[q2] +
                               ", not in Fib ∩ W",
                        {M[p], M[g], M[q2]});
        }
    }
  }

  // 4: factorization
  for (int f = 0; f < nm; ++f) {
    bool found = false;
    for (int u = 0; u < nm && !found; ++u)
      if (w[u] && c.dom[u] == c.dom[f])
        for (int p : c.hom(c.cod[u], c.cod[f]))
          if (fib[p] && c.compose(p, u) == f) {
            found = true;
            break;
          }
    if (!found) return fail(4, M[f] + " does not factor as a fibration after a weak equivalence", {M[f]});
  }
  return {};
}

}  // namespace procat
