#include "procat/eilmac.hpp"

#include <algorithm>
#include <map>

#include "procat/kernels.hpp"

namespace procat {

namespace {

long long checked_pow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > static_cast<long long>(global_budget().max_simplices_per_level))
      throw BudgetExceeded("level size exceeds the simplex budget");
  }
  return r;
}

}  // namespace

void SimplicialGroup::check() const {
  for (int k = 0; k <= top(); ++k)
    if (groups[k].order() != sset.count(k)) throw InvariantViolation("group level " + std::to_string(k) + " has wrong order");
  auto is_hom = [&](const FinGroup& a, const FinGroup& b, auto&& f, const std::string& what) {
    std::vector<int> gens = generators(a);
    for (int x = 0; x < a.order(); ++x)
      for (int g : gens)
        if (f(a.mul(x, g)) != b.mul(f(x), f(g))) throw InvariantViolation(what + " is not a homomorphism");
  };
  for (int k = 1; k <= top(); ++k) {
    for (int i = 0; i <= k; ++i)
      is_hom(groups[k], groups[k - 1], [&](int x) { return sset.d(k, i, x); },
             "d" + std::to_string(i) + " at level " + std::to_string(k));
    for (int i = 0; i < k; ++i)
      is_hom(groups[k - 1], groups[k], [&](int y) { return sset.s(k - 1, i, y); },
             "s" + std::to_string(i) + " at level " + std::to_string(k - 1));
  }
}

TauSSet b_group(const FinGroup& g, int stored) {
  const int n = g.order();
  const int L = std::max(stored, 2);
  Truncated lv(L + 1);
  for (int k = 0; k <= L; ++k) {
    lv[k].count = static_cast<int>(checked_pow(n, k));
    if (k == 0) continue;
    lv[k].faces.resize(static_cast<std::size_t>(lv[k].count) * (k + 1));
    for (int x = 0; x < lv[k].count; ++x) {
      std::vector<int> t = decode_uniform(x, n, k);
      for (int i = 0; i <= k; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == k) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.begin() + (i - 1));
          f.push_back(g.mul(t[i - 1], t[i]));
          f.insert(f.end(), t.begin() + i + 1, t.end());
        }
        lv[k].faces[static_cast<std::size_t>(x) * (k + 1) + i] = static_cast<int>(encode_uniform(f, n));
      }
    }
    const int prev = lv[k - 1].count;
    lv[k].degens.resize(static_cast<std::size_t>(prev) * k);
    for (int i = 0; i < k; ++i)
      for (int y = 0; y < prev; ++y) {
        std::vector<int> t = decode_uniform(y, n, k - 1);
        t.insert(t.begin() + i, 0);
        lv[k].degens[static_cast<std::size_t>(i) * prev + y] = static_cast<int>(encode_uniform(t, n));
      }
  }
  return TauSSet(std::move(lv), n == 1 ? 0 : 2, "B(" + g.name() + ")");
}

SimplicialGroup b_group_abelian(const FinGroup& a, int stored) {
  if (!a.is_abelian() || a.blocks().empty()) throw PreconditionError("B A as a simplicial group needs an abelian-backed group");
  SimplicialGroup out;
  out.sset = b_group(a, stored);
  for (int k = 0; k <= out.sset.stored_dim(); ++k) {
    std::vector<FinAbGroup> blocks;
    for (int r = 0; r < k; ++r) blocks.insert(blocks.end(), a.blocks().begin(), a.blocks().end());
    out.groups.push_back(FinGroup::abelian_blocks(std::move(blocks)));
  }
  out.sset = out.sset.renamed("K(" + a.name() + ",1)");
  return out;
}

TauSSet e_group(const FinGroup& g) {
  Level l0;
  l0.count = g.order();
  return TauSSet({l0}, 0, "E(" + g.name() + ")");
}

std::vector<int> eg_vertices(const TauSSet& eg, int k, int x) {
  std::vector<int> v(k + 1);
  for (int i = 0; i <= k; ++i) v[i] = eg.apply(k, x, {i});
  return v;
}

SimplicialMap eg_to_bg(const FinGroup& g, const TauSSet& eg, const TauSSet& bg) {
  const int L = bg.cosk_level();
  std::vector<std::vector<int>> lv(L + 1);
  for (int k = 0; k <= L; ++k) {
    lv[k].resize(eg.count(k));
    for (int x = 0; x < eg.count(k); ++x) {
      auto v = eg_vertices(eg, k, x);
      std::vector<int> t(k);
      for (int i = 0; i < k; ++i) t[i] = g.mul(g.inv(v[i]), v[i + 1]);
      lv[k][x] = static_cast<int>(encode_uniform(t, g.order()));
    }
  }
  return SimplicialMap(eg, bg, std::move(lv));
}

bool is_principal_covering(const FinGroup& g, const SimplicialMap& p, int top) {
  const TauSSet& eg = p.source();
  for (int k = 0; k <= top; ++k) {
    // index simplices by vertex sequence
    std::map<std::vector<int>, int> by_vertices;
    for (int x = 0; x < eg.count(k); ++x) by_vertices[eg_vertices(eg, k, x)] = x;
    std::vector<int> fiber_size(p.target().count(k), 0);
    for (int x = 0; x < eg.count(k); ++x) ++fiber_size[p(k, x)];
    for (int x = 0; x < eg.count(k); ++x) {
      auto v = eg_vertices(eg, k, x);
      int orbit = 0;
      for (int h = 0; h < g.order(); ++h) {
        std::vector<int> w(v);
        for (int& a : w) a = g.mul(h, a);
        int y = by_vertices.at(w);
        if (p(k, y) != p(k, x)) return false;        // orbit inside the fiber
        if (h != 0 && y == x) return false;           // free
        ++orbit;
      }
      if (orbit != fiber_size[p(k, x)]) return false;  // fiber is one orbit
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FinChainComplex FinChainComplex::concentrated(const FinAbGroup& a, int n) {
  FinChainComplex c;
  for (int k = 0; k <= n; ++k) c.groups.push_back(k == n ? a : FinAbGroup());
  c.diff.resize(n + 1);
  for (int k = 1; k <= n; ++k) c.diff[k].assign(c.groups[k].order(), 0);
  return c;
}

void FinChainComplex::check() const {
  if (diff.size() != groups.size()) throw InvariantViolation("chain complex needs one differential table per degree");
  for (int k = 1; k <= top(); ++k) {
    if (static_cast<long long>(diff[k].size()) != groups[k].order()) throw InvariantViolation("differential table has wrong size");
    for (long long a = 0; a < groups[k].order(); ++a)
      for (long long b = 0; b < groups[k].order(); ++b)
        if (diff[k][groups[k].add(a, b)] != groups[k - 1].add(diff[k][a], diff[k][b]))
          throw InvariantViolation("differential at degree " + std::to_string(k) + " is not additive");
  }
  for (int k = 2; k <= top(); ++k)
    for (long long a = 0; a < groups[k].order(); ++a)
      if (diff[k - 1][diff[k][a]] != 0) throw InvariantViolation("∂∂ != 0 at degree " + std::to_string(k));
}

std::vector<SimplexOp> surjections(int m, int k) {
  std::vector<SimplexOp> out;
  if (k > m || k < 0) return out;
  // choose the k positions t in 1..m where the value steps up
  std::vector<int> steps(k);
  for (int i = 0; i < k; ++i) steps[i] = i + 1;
  for (;;) {
    SimplexOp s(m + 1, 0);
    int v = 0, p = 0;
    for (int t = 0; t <= m; ++t) {
      if (p < k && steps[p] == t) {
        ++v;
        ++p;
      }
      s[t] = v;
    }
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && steps[i] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++steps[i];
    for (int j = i + 1; j < k; ++j) steps[j] = steps[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialGroup dold_kan_gamma(const FinChainComplex& c, int level_bound, int cosk_level) {
  c.check();
  struct Block {
    int k;
    SimplexOp sigma;
  };
  const int L = level_bound;
  std::vector<std::vector<Block>> blocks(L + 1);
  std::vector<std::map<SimplexOp, int>> block_of(L + 1);
  std::vector<std::vector<int>> radix(L + 1);
  std::vector<long long> sizes(L + 1);
  SimplicialGroup out;
  for (int m = 0; m <= L; ++m) {
    std::vector<FinAbGroup> gb;
    for (int k = 0; k <= std::min(m, c.top()); ++k) {
      if (c.groups[k].order() == 1) continue;
      for (auto& s : surjections(m, k)) {
        block_of[m][s] = static_cast<int>(blocks[m].size());
        blocks[m].push_back(Block{k, s});
        radix[m].push_back(static_cast<int>(c.groups[k].order()));
        gb.push_back(c.groups[k]);
      }
    }
    long long sz = 1;
    for (int r : radix[m]) {
      sz *= r;
      if (sz > static_cast<long long>(global_budget().max_simplices_per_level)) throw BudgetExceeded("Γ level too large");
    }
    sizes[m] = sz;
    out.groups.push_back(FinGroup::abelian_blocks(std::move(gb)));
  }
  // θ^* : Γ_m -> Γ_{m2} for θ : [m2] -> [m]
  auto structure = [&](int m, int m2, const SimplexOp& theta, long long code) {
    std::vector<int> in = decode_radix(code, radix[m]);
    std::vector<int> res(radix[m2].size(), 0);
    for (std::size_t b = 0; b < blocks[m].size(); ++b) {
      if (in[b] == 0) continue;
      const Block& bl = blocks[m][b];
      SimplexOp comp(m2 + 1);
      for (int t = 0; t <= m2; ++t) comp[t] = bl.sigma[theta[t]];
      std::vector<int> img(comp);
      img.erase(std::unique(img.begin(), img.end()), img.end());
      const int k2 = static_cast<int>(img.size()) - 1;
      SimplexOp s2(m2 + 1);
      for (int t = 0; t <= m2; ++t) s2[t] = static_cast<int>(std::lower_bound(img.begin(), img.end(), comp[t]) - img.begin());
      long long val;
      if (k2 == bl.k) {
        val = in[b];
      } else if (k2 == bl.k - 1 && img.front() == 1) {
        val = c.diff[bl.k][in[b]];
      } else {
        continue;
      }
      if (c.groups[k2].order() == 1 || val == 0) continue;
      int tb = block_of[m2].at(s2);
      res[tb] = static_cast<int>(c.groups[k2].add(res[tb], val));
    }
    return static_cast<int>(encode_radix(res, radix[m2]));
  };
  Truncated lv(L + 1);
  for (int m = 0; m <= L; ++m) {
    lv[m].count = static_cast<int>(sizes[m]);
    if (m == 0) continue;
    lv[m].faces.resize(static_cast<std::size_t>(sizes[m]) * (m + 1));
    for (int i = 0; i <= m; ++i) {
      SimplexOp th(m);
      for (int t = 0; t < m; ++t) th[t] = t < i ? t : t + 1;
      for (long long x = 0; x < sizes[m]; ++x) lv[m].faces[x * (m + 1) + i] = structure(m, m - 1, th, x);
    }
    lv[m].degens.resize(static_cast<std::size_t>(sizes[m - 1]) * m);
    for (int i = 0; i < m; ++i) {
      SimplexOp th(m + 1);
      for (int t = 0; t <= m; ++t) th[t] = t <= i ? t : t - 1;
      for (long long y = 0; y < sizes[m - 1]; ++y) lv[m].degens[i * sizes[m - 1] + y] = structure(m - 1, m, th, y);
    }
  }
  out.sset = TauSSet(std::move(lv), cosk_level, "Γ");
  return out;
}

std::vector<NormalizedPiece> normalized_complex(const SimplicialGroup& g, int top) {
  std::vector<NormalizedPiece> out;
  for (int k = 0; k <= top; ++k) {
    NormalizedPiece p;
    for (int x = 0; x < g.sset.count(k); ++x) {
      bool in = true;
      for (int i = 1; i <= k && in; ++i)
        if (g.sset.d(k, i, x) != 0) in = false;
      if (in) p.elements.push_back(x);
    }
    std::vector<int> ord;
    for (int x : p.elements) ord.push_back(g.groups[k].element_order(x));
    p.type = abelian_type_from_orders(ord);
    out.push_back(std::move(p));
  }
  return out;
}

SimplicialGroup k_abelian(const FinAbGroup& a, int n, int stored) {
  if (!a.is_finite()) throw PreconditionError("K(A,n) needs a finite group");
  if (n < 1) throw PreconditionError("K(A,n) needs n >= 1 (use discrete for n = 0)");
  if (n == 1) {
    SimplicialGroup g = b_group_abelian(FinGroup::from_abelian(a), std::max(stored, 3));
    g.sset = g.sset.renamed("K(" + a.to_string() + ",1)");
    return g;
  }
  SimplicialGroup g = dold_kan_gamma(FinChainComplex::concentrated(a, n), std::max(stored, n + 2), n + 1);
  g.sset = g.sset.renamed("K(" + a.to_string() + "," + std::to_string(n) + ")");
  return g;
}

// ---------------------------------------------------------------------------

WConstruction w_constructions(const SimplicialGroup& g, int cosk_level, int stored) {
  if (g.top() < stored) throw PreconditionError("W constructions need group levels through the stored level");
  const TauSSet& G = g.sset;
  WConstruction out;
  out.w_tuples.resize(stored + 1);
  out.wbar_tuples.resize(stored + 1);
  // radices: W_n entry j lives in G_{n-j}; W̄_n entry j lives in G_{n-1-j}
  auto w_radix = [&](int n) {
    std::vector<int> r;
    for (int j = 0; j <= n; ++j) r.push_back(g.groups[n - j].order());
    return r;
  };
  auto wbar_radix = [&](int n) {
    std::vector<int> r;
    for (int j = 0; j < n; ++j) r.push_back(g.groups[n - 1 - j].order());
    return r;
  };
  auto size_of = [](const std::vector<int>& r) {
    long long s = 1;
    for (int x : r) {
      s *= x;
      if (s > static_cast<long long>(global_budget().max_simplices_per_level)) throw BudgetExceeded("W level too large");
    }
    return s;
  };
  // W face d_i on h = (h_0..h_n), h_j in G_{n-j}; entries from `from` on
  auto w_face = [&](int n, int i, const std::vector<int>& h, int from) {
    std::vector<int> out_t;
    for (int j = from; j < n; ++j) {
      if (j < i)
        out_t.push_back(G.d(n - j, i - j, h[j]));
      else if (j == i)
        out_t.push_back(g.groups[n - j - 1].mul(G.d(n - j, 0, h[j]), h[j + 1]));
      else
        out_t.push_back(h[j + 1]);
    }
    return out_t;
  };
  auto w_degen = [&](int n, int i, const std::vector<int>& h, int from) {
    std::vector<int> out_t;
    for (int j = from; j <= n + 1; ++j) {
      if (j <= i)
        out_t.push_back(G.s(n - j, i - j, h[j]));
      else if (j == i + 1)
        out_t.push_back(0);
      else
        out_t.push_back(h[j - 1]);
    }
    return out_t;
  };
  Truncated wl(stored + 1), bl(stored + 1);
  for (int n = 0; n <= stored; ++n) {
    auto wr = w_radix(n), br = wbar_radix(n);
    const long long ws = size_of(wr), bs = size_of(br);
    wl[n].count = static_cast<int>(ws);
    bl[n].count = static_cast<int>(bs);
    for (long long c = 0; c < ws; ++c) out.w_tuples[n].push_back(decode_radix(c, wr));
    for (long long c = 0; c < bs; ++c) out.wbar_tuples[n].push_back(decode_radix(c, br));
    if (n == 0) continue;
    auto wr1 = w_radix(n - 1), br1 = wbar_radix(n - 1);
    for (long long c = 0; c < ws; ++c)
      for (int i = 0; i <= n; ++i)
        wl[n].faces.push_back(static_cast<int>(encode_radix(w_face(n, i, out.w_tuples[n][c], 0), wr1)));
    for (long long c = 0; c < bs; ++c) {
      std::vector<int> h(1, -1);
      h.insert(h.end(), out.wbar_tuples[n][c].begin(), out.wbar_tuples[n][c].end());
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(h.begin() + 2, h.end());
        } else {
          f = w_face(n, i, h, 1);
        }
        bl[n].faces.push_back(static_cast<int>(encode_radix(f, br1)));
      }
    }
    wl[n].degens.resize(out.w_tuples[n - 1].size() * n);
    for (int i = 0; i < n; ++i)
      for (std::size_t c = 0; c < out.w_tuples[n - 1].size(); ++c)
        wl[n].degens[i * out.w_tuples[n - 1].size() + c] =
            static_cast<int>(encode_radix(w_degen(n - 1, i, out.w_tuples[n - 1][c], 0), wr));
    bl[n].degens.resize(out.wbar_tuples[n - 1].size() * n);
    for (int i = 0; i < n; ++i)
      for (std::size_t c = 0; c < out.wbar_tuples[n - 1].size(); ++c) {
        std::vector<int> h(1, -1);
        h.insert(h.end(), out.wbar_tuples[n - 1][c].begin(), out.wbar_tuples[n - 1][c].end());
        std::vector<int> f;
        if (i == 0) {
          f.push_back(0);
          f.insert(f.end(), h.begin() + 1, h.end());
        } else {
          f = w_degen(n - 1, i, h, 1);
        }
        bl[n].degens[i * out.wbar_tuples[n - 1].size() + c] = static_cast<int>(encode_radix(f, br));
      }
  }
  out.w = TauSSet(std::move(wl), cosk_level, "W(" + G.name() + ")");
  out.wbar = TauSSet(std::move(bl), cosk_level, "Wbar(" + G.name() + ")");
  std::vector<std::vector<int>> pl(stored + 1);
  for (int n = 0; n <= stored; ++n) {
    auto br = wbar_radix(n);
    for (const auto& t : out.w_tuples[n]) pl[n].push_back(static_cast<int>(encode_radix(std::vector<int>(t.begin() + 1, t.end()), br)));
  }
  out.projection = SimplicialMap(out.w, out.wbar, std::move(pl));
  return out;
}

// ---------------------------------------------------------------------------

int GAction::apply(int k, int g, int x) const {
  return act[k][static_cast<std::size_t>(g) * space.count(k) + x];
}

void GAction::extend_to(int k) {
  if (static_cast<int>(act.size()) < space.cosk_level() + 1)
    throw PreconditionError("action must be given through the coskeletal level");
  for (int j = static_cast<int>(act.size()); j <= k; ++j) {
    std::vector<int> t(static_cast<std::size_t>(group.order()) * space.count(j));
    std::vector<int> bd(j + 1);
    for (int g = 0; g < group.order(); ++g)
      for (int x = 0; x < space.count(j); ++x) {
        for (int i = 0; i <= j; ++i) bd[i] = apply(j - 1, g, space.d(j, i, x));
        auto r = space.with_boundary(j, bd);
        if (r.empty()) throw InvariantViolation("action does not extend to level " + std::to_string(j));
        t[static_cast<std::size_t>(g) * space.count(j) + x] = r[0];
      }
    act.push_back(std::move(t));
  }
}

void GAction::check() const {
  for (int k = 0; k < static_cast<int>(act.size()); ++k) {
    const int n = space.count(k);
    if (act[k].size() != static_cast<std::size_t>(group.order()) * n) throw InvariantViolation("action table has wrong size");
    for (int x = 0; x < n; ++x)
      if (apply(k, 0, x) != x) throw InvariantViolation("action: identity acts nontrivially");
    for (int g = 0; g < group.order(); ++g)
      for (int h = 0; h < group.order(); ++h)
        for (int x = 0; x < n; ++x)
          if (apply(k, group.mul(g, h), x) != apply(k, g, apply(k, h, x))) throw InvariantViolation("action: (gh)x != g(hx)");
    for (int g = 0; g < group.order(); ++g)
      for (int x = 0; x < n; ++x) {
        if (k > 0)
          for (int i = 0; i <= k; ++i)
            if (space.d(k, i, apply(k, g, x)) != apply(k - 1, g, space.d(k, i, x)))
              throw InvariantViolation("action does not commute with d" + std::to_string(i));
        if (k + 1 < static_cast<int>(act.size()))
          for (int i = 0; i <= k; ++i)
            if (space.s(k, i, apply(k, g, x)) != apply(k + 1, g, space.s(k, i, x)))
              throw InvariantViolation("action does not commute with s" + std::to_string(i));
      }
  }
}

GAction GAction::trivial(const FinGroup& g, const TauSSet& x, int top) {
  GAction a{g, x, {}};
  for (int k = 0; k <= top; ++k) {
    std::vector<int> t;
    for (int h = 0; h < g.order(); ++h)
      for (int s = 0; s < x.count(k); ++s) t.push_back(s);
    a.act.push_back(std::move(t));
  }
  return a;
}

GAction module_action_on_k(const GModule& m, const SimplicialGroup& k_an) {
  GAction a{m.group, k_an.sset, {}};
  const long long na = m.module.order();
  for (int k = 0; k <= k_an.top(); ++k) {
    const auto& blocks = k_an.groups[k].blocks();
    for (const auto& b : blocks)
      if (b.order() != na && !(blocks.size() == 1 && b.order() == 1)) throw PreconditionError("K(A,n) blocks must all be A");
    const int cnt = k_an.sset.count(k);
    std::vector<int> t(static_cast<std::size_t>(m.group.order()) * cnt);
    for (int g = 0; g < m.group.order(); ++g)
      for (int x = 0; x < cnt; ++x) {
        long long code = x, res = 0, mul = 1;
        if (cnt > 1)
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            res += m.apply(g, static_cast<int>(code % na)) * mul;
            code /= na;
            mul *= na;
          }
        t[static_cast<std::size_t>(g) * cnt + x] = static_cast<int>(res);
      }
    a.act.push_back(std::move(t));
  }
  a.check();
  return a;
}

TauSSet homotopy_quotient(GAction action, int cosk_level, int stored) {
  const FinGroup& G = action.group;
  const TauSSet& X = action.space;
  action.extend_to(stored);
  const int n = G.order();
  Truncated lv(stored + 1);
  std::vector<long long> gk(stored + 2);
  for (int k = 0; k <= stored + 1; ++k) gk[k] = checked_pow(n, k);
  auto code = [&](int k, const std::vector<int>& h, int x) {
    return static_cast<int>(static_cast<long long>(x) * gk[k] + encode_uniform(h, n));
  };
  for (int k = 0; k <= stored; ++k) {
    const long long cnt = gk[k] * X.count(k);
    if (cnt > static_cast<long long>(global_budget().max_simplices_per_level)) throw BudgetExceeded("homotopy quotient level too large");
    lv[k].count = static_cast<int>(cnt);
    if (k == 0) continue;
    lv[k].faces.resize(static_cast<std::size_t>(cnt) * (k + 1));
    for (long long c = 0; c < cnt; ++c) {
      const int x = static_cast<int>(c / gk[k]);
      std::vector<int> h = decode_uniform(c % gk[k], n, k);
      for (int i = 0; i <= k; ++i) {
        std::vector<int> h2;
        int x2;
        if (i == 0) {
          const int inv = G.inv(h[0]);
          for (int j = 1; j < k; ++j) h2.push_back(G.mul(inv, h[j]));
          x2 = action.apply(k - 1, inv, X.d(k, 0, x));
        } else {
          h2 = h;
          h2.erase(h2.begin() + (i - 1));
          x2 = X.d(k, i, x);
        }
        lv[k].faces[c * (k + 1) + i] = code(k - 1, h2, x2);
      }
    }
    const long long pc = gk[k - 1] * X.count(k - 1);
    lv[k].degens.resize(static_cast<std::size_t>(pc) * k);
    for (int i = 0; i < k; ++i)
      for (long long c = 0; c < pc; ++c) {
        const int x = static_cast<int>(c / gk[k - 1]);
        std::vector<int> h = decode_uniform(c % gk[k - 1], n, k - 1);
        // vertices (e, h_1..h_{k-1}); repeat vertex i
        const int vi = i == 0 ? 0 : h[i - 1];
        h.insert(h.begin() + i, vi);
        lv[k].degens[i * pc + c] = code(k, h, X.s(k - 1, i, x));
      }
  }
  return TauSSet(std::move(lv), cosk_level, "(E" + G.name() + " x " + X.name() + ")/" + G.name());
}

}  // namespace procat
