#include "procat/poset.hpp"

#include <algorithm>
#include <numeric>

namespace procat {

std::vector<Elem> EffPoset::fragment(Elem depth) const {
  Elem n = size ? std::min(*size, depth) : depth;
  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e) out.push_back(e);
  return out;
}

void EffPoset::validate(Elem depth) const {
  auto fr = fragment(depth);
  for (Elem a : fr) {
    if (!leq(a, a)) throw InvariantViolation(name + ": not reflexive at " + label(a));
    auto ds = downset(a);
    for (Elem s : ds)
      if (!leq(s, a) || s == a || s >= a)
        throw InvariantViolation(name + ": downset of " + label(a) + " contains " + label(s));
    for (Elem b : fr) {
      const bool ab = leq(a, b), ba = leq(b, a);
      if (a != b && ab && ba) throw InvariantViolation(name + ": not antisymmetric at " + label(a) + ", " + label(b));
      if (ba && b != a && b > a) throw InvariantViolation(name + ": enumeration is not a linear extension at " + label(a));
      const bool in_ds = std::find(ds.begin(), ds.end(), b) != ds.end();
      if (in_ds != (ba && a != b)) throw InvariantViolation(name + ": downset of " + label(a) + " is not exact");
      const Elem j = join(a, b);
      if (!leq(a, j) || !leq(b, j)) throw InvariantViolation(name + ": join is not an upper bound");
      if (!ab) continue;
      for (Elem c : fr)
        if (leq(b, c) && !leq(a, c)) throw InvariantViolation(name + ": not transitive");
    }
  }
}

FinPoset EffPoset::to_finite(Elem depth) const {
  auto fr = fragment(depth);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (Elem a : fr) {
    names.push_back(label(a));
    for (Elem b : fr)
      if (leq(a, b)) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return FinPoset::from_relation(std::move(names), rel);
}

EffPoset EffPoset::divisibility() {
  EffPoset p;
  p.name = "divisibility";
  p.label = [](Elem e) { return std::to_string(e + 1); };
  p.leq = [](Elem a, Elem b) { return (b + 1) % (a + 1) == 0; };
  p.join = [](Elem a, Elem b) { return std::lcm(a + 1, b + 1) - 1; };
  p.downset = [](Elem t) {
    std::vector<Elem> out;
    for (Elem d = 1; d * d <= t + 1; ++d) {
      if ((t + 1) % d) continue;
      if (d != t + 1) out.push_back(d - 1);
      const Elem e = (t + 1) / d;
      if (e != d && e != t + 1) out.push_back(e - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return p;
}

EffPoset EffPoset::chain(int k) {
  EffPoset p = omega();
  p.name = "chain:" + std::to_string(k);
  p.size = k;
  return p;
}

EffPoset EffPoset::omega() {
  EffPoset p;
  p.name = "omega";
  p.label = [](Elem e) { return std::to_string(e); };
  p.leq = [](Elem a, Elem b) { return a <= b; };
  p.join = [](Elem a, Elem b) { return std::max(a, b); };
  p.downset = [](Elem t) {
    std::vector<Elem> out;
    for (Elem s = 0; s < t; ++s) out.push_back(s);
    return out;
  };
  return p;
}

namespace {

// diagonal enumeration of N x N: e -> (a, b) with a + b = d, a increasing
std::pair<Elem, Elem> diag_decode(Elem e) {
  Elem d = 0;
  while ((d + 1) * (d + 2) / 2 <= e) ++d;
  const Elem a = e - d * (d + 1) / 2;
  return {a, d - a};
}

Elem diag_encode(Elem a, Elem b) {
  const Elem d = a + b;
  return d * (d + 1) / 2 + a;
}

}  // namespace

EffPoset EffPoset::product(const EffPoset& a, const EffPoset& b) {
  EffPoset p;
  p.name = "product:" + a.name + "," + b.name;
  std::function<std::pair<Elem, Elem>(Elem)> dec;
  std::function<Elem(Elem, Elem)> enc;
  if (a.size && b.size) {
    const Elem nb = *b.size;
    p.size = *a.size * nb;
    // by (x + y) then x: a linear extension since both factors are
    std::vector<std::pair<Elem, Elem>> order;
    for (Elem s = 0; s <= *a.size + nb - 2; ++s)
      for (Elem x = 0; x < *a.size; ++x)
        if (s - x >= 0 && s - x < nb) order.emplace_back(x, s - x);
    std::vector<Elem> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].first * nb + order[i].second] = static_cast<Elem>(i);
    dec = [order](Elem e) { return order[e]; };
    enc = [pos, nb](Elem x, Elem y) { return pos[x * nb + y]; };
  } else {
    if (a.size || b.size) throw PreconditionError("product of a finite and an infinite effective poset is not supported");
    dec = diag_decode;
    enc = diag_encode;
  }
  p.label = [a, b, dec](Elem e) {
    auto [x, y] = dec(e);
    return "(" + a.label(x) + "," + b.label(y) + ")";
  };
  p.leq = [a, b, dec](Elem u, Elem v) {
    auto [x1, y1] = dec(u);
    auto [x2, y2] = dec(v);
    return a.leq(x1, x2) && b.leq(y1, y2);
  };
  p.join = [a, b, dec, enc](Elem u, Elem v) {
    auto [x1, y1] = dec(u);
    auto [x2, y2] = dec(v);
    return enc(a.join(x1, x2), b.join(y1, y2));
  };
  p.downset = [a, b, dec, enc](Elem t) {
    auto [x, y] = dec(t);
    auto dx = a.downset(x), dy = b.downset(y);
    dx.push_back(x);
    dy.push_back(y);
    std::vector<Elem> out;
    for (Elem u : dx)
      for (Elem v : dy)
        if (u != x || v != y) out.push_back(enc(u, v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return p;
}

EffPoset EffPoset::finite(const FinPoset& fp) {
  fp.validate();
  const int n = fp.size();
  // renumber along a linear extension (by downset size)
  std::vector<int> order(n), below(n, 0);
  for (int a = 0; a < n; ++a) {
    order[a] = a;
    for (int b = 0; b < n; ++b)
      if (fp.lt(b, a)) ++below[a];
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return below[x] < below[y]; });
  auto le = [fp, order](Elem a, Elem b) { return fp.le(order[a], order[b]); };
  EffPoset p;
  p.name = "finite";
  p.size = n;
  p.label = [fp, order](Elem e) { return fp.elements[order[e]]; };
  p.leq = le;
  p.join = [le, n](Elem a, Elem b) -> Elem {
    for (Elem c = 0; c < n; ++c)
      if (le(a, c) && le(b, c)) return c;
    throw PreconditionError("finite poset is not cofiltered: no upper bound");
  };
  p.downset = [le](Elem t) {
    std::vector<Elem> out;
    for (Elem s = 0; s < t; ++s)
      if (le(s, t)) out.push_back(s);
    return out;
  };
  return p;
}

EffPoset EffPoset::by_name(const std::string& spec) {
  if (spec == "divisibility") return divisibility();
  if (spec == "omega") return omega();
  if (spec.rfind("chain:", 0) == 0) return chain(std::stoi(spec.substr(6)));
  if (spec.rfind("product:", 0) == 0) {
    const std::string rest = spec.substr(8);
    const auto comma = rest.find(',');
    if (comma != std::string::npos) return product(by_name(rest.substr(0, comma)), by_name(rest.substr(comma + 1)));
  }
  throw PreconditionError("unknown poset builder " + spec);
}

PosetMap PosetMap::factorials() {
  PosetMap m{EffPoset::omega(), EffPoset::divisibility(), {}};
  m.map = [](Elem j) {
    Elem f = 1;
    for (Elem k = 2; k <= j + 1; ++k) {
      if (f > (Elem{1} << 62) / k) throw BudgetExceeded("factorial index overflows");
      f *= k;
    }
    return f - 1;
  };
  return m;
}

PosetMap PosetMap::identity(const EffPoset& p) { return {p, p, [](Elem e) { return e; }}; }

PosetMap PosetMap::constant(const EffPoset& s, const EffPoset& t, Elem value) {
  return {s, t, [value](Elem) { return value; }};
}

}  // namespace procat
