#include "procat/homotopy.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "procat/search.hpp"

namespace procat {

KanVerdict is_kan(const TauSSet& x, Exec exec) {
  KanVerdict v;
  const int top = x.cosk_level() + 1;
  for (int m = 1; m <= top; ++m) {
    for (int i = 0; i <= m; ++i) {
      auto f = find_unfillable_horn(x, m, i, exec);
      if (f) {
        v.kan = false;
        v.failure = f;
        v.checked_up_to = m;
        return v;
      }
    }
    v.checked_up_to = m;
  }
  return v;
}

FibrationVerdict is_kan_fibration(const SimplicialMap& p, Exec exec) {
  FibrationVerdict v;
  const int top = std::max(p.source().cosk_level(), p.target().cosk_level()) + 1;
  for (int m = 1; m <= top; ++m) {
    for (int i = 0; i <= m; ++i) {
      auto f = find_unliftable_horn(p, m, i, exec);
      if (f) {
        v.ok = false;
        v.failure = f;
        v.checked_up_to = m;
        return v;
      }
    }
    v.checked_up_to = m;
  }
  return v;
}

FibrationVerdict is_trivial_fibration(const SimplicialMap& p, Exec exec) {
  FibrationVerdict v;
  const int top = std::max(p.source().cosk_level(), p.target().cosk_level()) + 1;
  for (int k = 0; k <= top; ++k) {
    auto f = find_unliftable_boundary(p, k, exec);
    if (f) {
      v.ok = false;
      v.failure = f;
      v.checked_up_to = k;
      return v;
    }
    v.checked_up_to = k;
  }
  return v;
}

namespace {

bool prism_homotopy(const TauSSet& x, int m, int a, int b) {
  const int L = std::max(m + 1, x.cosk_level());
  StdSimplex dm = standard_simplex(m, L);
  StdSimplex d1 = standard_simplex(1, L);
  Product p = product(dm.sset, d1.sset, L);
  std::vector<std::vector<int>> fixed(m + 1);
  for (int k = 0; k <= m; ++k) {
    const int n1 = d1.sset.count(k);
    fixed[k].assign(p.object.count(k), -1);
    for (int ia = 0; ia < dm.sset.count(k); ++ia) {
      const SimplexOp& sa = dm.seqs[k][ia];
      bool surj = true;
      for (int v = 0, t = 0; v <= m; ++v) {
        while (t <= k && sa[t] < v) ++t;
        if (t > k || sa[t] != v) {
          surj = false;
          break;
        }
      }
      for (int ib = 0; ib < n1; ++ib) {
        const SimplexOp& sb = d1.seqs[k][ib];
        const bool at0 = sb.back() == 0, at1 = sb.front() == 1;
        int val = -1;
        if (at0 || !surj)
          val = x.apply(m, a, sa);
        else if (at1)
          val = x.apply(m, b, sa);
        fixed[k][ia * n1 + ib] = val;
      }
    }
  }
  MapSearch ms(MapSearchSpec{p.object, x, std::move(fixed), {}, 0});
  return ms.first().has_value();
}

bool simplex_homotopy(const TauSSet& x, int m, int a, int b) {
  std::vector<int> faces(m + 2);
  for (int i = 0; i < m; ++i) faces[i] = x.s(m - 1, m - 1, x.d(m, i, a));
  faces[m] = a;
  faces[m + 1] = b;
  return !x.with_boundary(m + 1, faces).empty();
}

}  // namespace

bool homotopic_rel_boundary(const TauSSet& x, int m, int a, int b, RelHomotopy method) {
  if (m > 0 && x.boundary(m, a) != x.boundary(m, b)) return false;
  if (a == b) return true;
  return method == RelHomotopy::Prism ? prism_homotopy(x, m, a, b) : simplex_homotopy(x, m, a, b);
}

namespace {

std::map<std::vector<int>, std::vector<int>> group_by_boundary(const TauSSet& x, int m, const std::vector<char>* allowed) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int s = 0; s < x.count(m); ++s) {
    if (allowed && !(*allowed)[s]) continue;
    groups[m == 0 ? std::vector<int>{} : x.boundary(m, s)].push_back(s);
  }
  return groups;
}

}  // namespace

MinimalVerdict is_minimal(const TauSSet& x, RelHomotopy method) {
  MinimalVerdict v;
  for (int m = 0; m <= x.cosk_level() + 1; ++m) {
    for (auto& [bd, members] : group_by_boundary(x, m, nullptr)) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (homotopic_rel_boundary(x, m, members[i], members[j], method)) {
            v.minimal = false;
            v.dim = m;
            v.first = members[i];
            v.second = members[j];
            return v;
          }
    }
  }
  return v;
}

std::vector<int> component_of_vertices(const TauSSet& x) {
  DisjointSets ds(x.count(0));
  for (int e = 0; e < x.count(1); ++e) ds.unite(x.d(1, 0, e), x.d(1, 1, e));
  std::vector<int> c(x.count(0));
  for (int v = 0; v < x.count(0); ++v) c[v] = ds.find(v);
  return c;
}

int pi0(const TauSSet& x) {
  auto c = component_of_vertices(x);
  int n = 0;
  for (int v = 0; v < static_cast<int>(c.size()); ++v)
    if (c[v] == v) ++n;
  return n;
}

MinimalModel minimalize(const TauSSet& x, RelHomotopy method) {
  const int n = x.cosk_level();
  std::vector<std::vector<char>> member(n + 1);
  {
    auto comp = component_of_vertices(x);
    member[0].assign(x.count(0), 0);
    for (int v = 0; v < x.count(0); ++v)
      if (comp[v] == v) member[0][v] = 1;
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<char> cand(x.count(k), 0);
    for (int s = 0; s < x.count(k); ++s) {
      bool ok = true;
      for (int i = 0; i <= k && ok; ++i)
        if (!member[k - 1][x.d(k, i, s)]) ok = false;
      cand[s] = ok;
    }
    member[k].assign(x.count(k), 0);
    for (auto& [bd, members] : group_by_boundary(x, k, &cand)) {
      DisjointSets ds(members.size());
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (ds.find(static_cast<int>(i)) != ds.find(static_cast<int>(j)) &&
              homotopic_rel_boundary(x, k, members[i], members[j], method))
            ds.unite(static_cast<int>(i), static_cast<int>(j));
      std::map<int, int> rep;  // class root -> chosen member index
      for (std::size_t i = 0; i < members.size(); ++i) {
        int r = ds.find(static_cast<int>(i));
        const bool deg = x.is_degenerate(k, members[i]);
        auto it = rep.find(r);
        if (it == rep.end()) {
          rep[r] = static_cast<int>(i);
        } else if (deg) {
          if (x.is_degenerate(k, members[it->second]))
            throw InvariantViolation("two homotopic degenerate simplices with one boundary (input not Kan?)");
          it->second = static_cast<int>(i);
        }
      }
      for (auto& [r, i] : rep) member[k][members[i]] = 1;
    }
  }
  MinimalModel out;
  out.sub = subcomplex(x, member, n);
  // retraction: identity on M, searched elsewhere
  std::vector<std::vector<int>> fixed(n + 1);
  const auto& inc = out.sub.inclusion;
  for (int k = 0; k <= n; ++k) {
    fixed[k].assign(x.count(k), -1);
    for (int s = 0; s < out.sub.object.count(k); ++s) fixed[k][inc(k, s)] = s;
  }
  MapSearch ms(MapSearchSpec{x, out.sub.object, std::move(fixed), {}, 0});
  auto r = ms.first();
  if (!r) throw InvariantViolation("no retraction onto the minimal subcomplex (input not Kan?)");
  out.retraction = *r;
  out.sub.object = out.sub.object.renamed("min(" + x.name() + ")");
  return out;
}

HomotopyGroup homotopy_group(const TauSSet& x, int basepoint, int k, bool assume_minimal) {
  if (k < 1) throw PreconditionError("use pi0 for k = 0");
  if (k > x.cosk_level() + 1) throw PreconditionError("k above n+1");
  if (!assume_minimal && !is_minimal(x, RelHomotopy::Simplex).minimal)
    throw PreconditionError("homotopy groups are read off minimal complexes only");
  HomotopyGroup out;
  out.k = k;
  const int base_lo = x.degenerate_vertex(k - 1, basepoint);
  const int base_k = x.degenerate_vertex(k, basepoint);
  std::vector<int> bd(k + 1, base_lo);
  auto r = x.with_boundary(k, bd);
  out.elements.push_back(base_k);
  for (int s : r)
    if (s != base_k) out.elements.push_back(s);
  const int n = static_cast<int>(out.elements.size());
  std::unordered_map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[out.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> faces(k + 2, base_k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      faces[k - 1] = out.elements[a];
      faces[k + 1] = out.elements[b];
      faces[k] = -1;
      auto fill = x.horn_fillers(k + 1, k, faces);
      if (fill.empty()) throw InvariantViolation("horn for the product has no filler (not Kan)");
      int prod = x.d(k + 1, k, fill[0]);
      for (int z : fill)
        if (x.d(k + 1, k, z) != prod) throw InvariantViolation("product not unique (not minimal)");
      auto it = idx.find(prod);
      if (it == idx.end()) throw InvariantViolation("product leaves the sphere simplices");
      table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  out.group = FinGroup::from_table(std::move(table), n, "pi" + std::to_string(k));
  if (out.group.is_abelian()) out.abelian = abelian_type(out.group);
  return out;
}

// ---------------------------------------------------------------------------

MappingSpace mapping_space(const TauSSet& x, const TauSSet& y, int level_bound, std::size_t limit) {
  MappingSpace ms;
  ms.source = x;
  ms.target = y;
  ms.top = level_bound;
  const int ny = y.cosk_level();
  std::vector<StdSimplex> simp;
  std::vector<Product> prods;
  for (int m = 0; m <= level_bound + 1; ++m) {
    simp.push_back(standard_simplex(m, std::max(ny, 1)));
    prods.push_back(product(x, simp[m].sset, ny));
  }
  auto& lookup = ms.lookup;
  lookup.resize(level_bound + 1);
  ms.maps.resize(level_bound + 1);
  for (int m = 0; m <= level_bound; ++m) {
    MapSearch search(MapSearchSpec{prods[m].object, y, {}, {}, 0});
    search.enumerate([&](const MapSearch::Levels& lv) {
      std::vector<int> flat;
      for (const auto& l : lv) flat.insert(flat.end(), l.begin(), l.end());
      if (ms.maps[m].size() >= limit) throw BudgetExceeded("mapping space level " + std::to_string(m) + " too large");
      lookup[m].emplace(flat, static_cast<int>(ms.maps[m].size()));
      ms.maps[m].push_back(std::move(flat));
      return true;
    });
  }
  // restriction along θ : Δ^{m2} -> Δ^m, applied to a flattened map on X × Δ^m
  auto restrict = [&](int m, int m2, const std::vector<int>& f, auto&& theta) {
    std::vector<int> out;
    std::size_t off = 0;
    for (int k = 0; k <= ny; ++k) {
      const int nm = simp[m].sset.count(k), nm2 = simp[m2].sset.count(k);
      for (int a = 0; a < x.count(k); ++a)
        for (int b = 0; b < nm2; ++b) {
          SimplexOp seq = simp[m2].seqs[k][b];
          for (int& v : seq) v = theta(v);
          out.push_back(f[off + static_cast<std::size_t>(a) * nm + simp[m].index_of(seq)]);
        }
      off += static_cast<std::size_t>(x.count(k)) * nm;
    }
    return out;
  };
  ms.levels.resize(level_bound + 1);
  for (int m = 0; m <= level_bound; ++m) {
    ms.levels[m].count = static_cast<int>(ms.maps[m].size());
    if (m == 0) continue;
    for (const auto& f : ms.maps[m])
      for (int i = 0; i <= m; ++i) {
        auto g = restrict(m, m - 1, f, [i](int v) { return v < i ? v : v + 1; });
        ms.levels[m].faces.push_back(lookup[m - 1].at(g));
      }
    ms.levels[m].degens.resize(ms.maps[m - 1].size() * m);
    for (int i = 0; i < m; ++i)
      for (std::size_t c = 0; c < ms.maps[m - 1].size(); ++c) {
        auto g = restrict(m - 1, m, ms.maps[m - 1][c], [i](int v) { return v <= i ? v : v - 1; });
        ms.levels[m].degens[i * ms.maps[m - 1].size() + c] = lookup[m].at(g);
      }
  }
  return ms;
}

int MappingSpace::index_of(int m, const std::vector<int>& flat) const {
  auto it = lookup[m].find(flat);
  return it == lookup[m].end() ? -1 : it->second;
}

TauSSet mapping_space_sset(const MappingSpace& ms) {
  const int n = ms.target.cosk_level();
  if (ms.top < n) throw PreconditionError("mapping space needs levels through n_Y");
  return TauSSet(ms.levels, n, "Map(" + ms.source.name() + "," + ms.target.name() + ")");
}

bool homotopic_maps(const SimplicialMap& f, const SimplicialMap& g) {
  const TauSSet& x = f.source();
  const TauSSet& y = f.target();
  const int ny = y.cosk_level();
  StdSimplex d1 = standard_simplex(1, std::max(ny, 1));
  Product p = product(x, d1.sset, ny);
  std::vector<std::vector<int>> fixed(ny + 1);
  for (int k = 0; k <= ny; ++k) {
    const int n1 = d1.sset.count(k);
    fixed[k].assign(p.object.count(k), -1);
    for (int a = 0; a < x.count(k); ++a)
      for (int b = 0; b < n1; ++b) {
        const SimplexOp& sb = d1.seqs[k][b];
        if (sb.back() == 0) fixed[k][a * n1 + b] = f(k, a);
        else if (sb.front() == 1) fixed[k][a * n1 + b] = g(k, a);
      }
  }
  MapSearch search(MapSearchSpec{p.object, y, std::move(fixed), {}, 0});
  return search.first().has_value();
}

PathObject path_object(const TauSSet& y) {
  const int n = y.cosk_level();
  StdSimplex d1 = standard_simplex(1, std::max(n, 1));
  MappingSpace ms = mapping_space(d1.sset, y, n);
  PathObject po;
  po.path = mapping_space_sset(ms);
  std::vector<std::vector<int>> e0(n + 1), e1(n + 1), cst(n + 1);
  for (int m = 0; m <= n; ++m) {
    StdSimplex dm = standard_simplex(m, std::max(n, 1));
    std::size_t off = 0;
    for (int k = 0; k < m; ++k) off += static_cast<std::size_t>(d1.sset.count(k)) * dm.sset.count(k);
    const int nm = dm.sset.count(m);
    SimplexOp id(m + 1);
    for (int v = 0; v <= m; ++v) id[v] = v;
    const int b = dm.index_of(id);
    const int a0 = d1.index_of(SimplexOp(m + 1, 0)), a1 = d1.index_of(SimplexOp(m + 1, 1));
    for (const auto& flat : ms.maps[m]) {
      e0[m].push_back(flat[off + static_cast<std::size_t>(a0) * nm + b]);
      e1[m].push_back(flat[off + static_cast<std::size_t>(a1) * nm + b]);
    }
    for (int s = 0; s < y.count(m); ++s) {
      std::vector<int> flat;
      for (int k = 0; k <= n; ++k)
        for (int a = 0; a < d1.sset.count(k); ++a)
          for (int bb = 0; bb < dm.sset.count(k); ++bb) flat.push_back(y.apply(m, s, dm.seqs[k][bb]));
      const int idx = ms.index_of(m, flat);
      if (idx < 0) throw InvariantViolation("constant path missing from the path object");
      cst[m].push_back(idx);
    }
  }
  po.ev0 = SimplicialMap(po.path, y, std::move(e0));
  po.ev1 = SimplicialMap(po.path, y, std::move(e1));
  po.constant = SimplicialMap(y, po.path, std::move(cst));
  return po;
}

int pi0_mapping_space(const TauSSet& x, const TauSSet& y) {
  MappingSpace ms = mapping_space(x, y, 1);
  DisjointSets ds(ms.levels[0].count);
  for (int e = 0; e < ms.levels[1].count; ++e) ds.unite(ms.levels[1].faces[e * 2], ms.levels[1].faces[e * 2 + 1]);
  return ds.count_roots();
}

}  // namespace procat
