#include "procat/search.hpp"

#include <algorithm>

namespace procat {

MapSearch::MapSearch(MapSearchSpec spec) : spec_(std::move(spec)) {
  const TauSSet& x = spec_.source;
  const TauSSet& y = spec_.target;
  if (!x.valid() || !y.valid()) throw PreconditionError("map search on invalid objects");
  top_ = y.cosk_level();
  var_of_.resize(top_ + 1);
  ez_.resize(top_ + 1);
  for (int k = 0; k <= top_; ++k) {
    var_of_[k].assign(x.count(k), -1);
    ez_[k].reserve(x.count(k));
    for (int s = 0; s < x.count(k); ++s) ez_[k].push_back(x.decompose(k, s));
    for (int s = 0; s < x.count(k); ++s)
      if (ez_[k][s].dim == k) {
        var_of_[k][s] = static_cast<int>(vars_.size());
        vars_.push_back(Var{k, s, {}, -1, {}});
      }
  }
  for (auto& v : vars_) {
    if (v.dim == 0) continue;
    for (int i = 0; i <= v.dim; ++i) {
      int f = x.d(v.dim, i, v.simplex);
      const auto& e = ez_[v.dim - 1][f];
      v.faces.emplace_back(var_of_[e.dim][e.simplex], e.dim, e.surj);
    }
  }
  for (int k = 0; k < static_cast<int>(spec_.fixed.size()); ++k)
    for (int s = 0; s < static_cast<int>(spec_.fixed[k].size()); ++s) {
      int val = spec_.fixed[k][s];
      if (val < 0) continue;
      if (k > top_) {
        high_fixed_.emplace_back(k, s, val);
        continue;
      }
      const auto& e = ez_[k][s];
      Var& v = vars_[var_of_[e.dim][e.simplex]];
      if (e.dim == k) {
        if (v.fixed >= 0 && v.fixed != val) throw PreconditionError("conflicting fixed values");
        v.fixed = val;
      } else {
        v.degenerate_fixed.emplace_back(e.surj, val);
      }
    }

  // static order
  const int nv = static_cast<int>(vars_.size());
  std::vector<std::vector<int>> cofaces(nv);
  std::vector<int> missing(nv, 0);
  for (int a = 0; a < nv; ++a) {
    std::vector<int> fs;
    for (auto& [fv, r, sj] : vars_[a].faces) fs.push_back(fv);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    missing[a] = static_cast<int>(fs.size());
    for (int fv : fs) cofaces[fv].push_back(a);
  }
  std::vector<int> placed_faces(nv, 0), conn(nv, 0);
  std::vector<char> done(nv, 0);
  std::vector<int> ready;
  for (int a = 0; a < nv; ++a)
    if (missing[a] == 0) ready.push_back(a);
  order_.reserve(nv);
  while (!ready.empty()) {
    std::size_t best = 0;
    auto key = [&](int a) { return std::make_tuple(vars_[a].fixed >= 0, vars_[a].dim, conn[a], -a); };
    for (std::size_t t = 1; t < ready.size(); ++t)
      if (key(ready[t]) > key(ready[best])) best = t;
    int a = ready[best];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(best));
    done[a] = 1;
    order_.push_back(a);
    for (int c : cofaces[a]) {
      ++placed_faces[c];
      if (--missing[c] == 0) ready.push_back(c);
      for (auto& [fv, r, sj] : vars_[c].faces)
        if (!done[fv]) conn[fv] = std::max(conn[fv], placed_faces[c]);
    }
  }
  if (static_cast<int>(order_.size()) != nv) throw InvariantViolation("map search ordering is incomplete");
}

MapSearch::Levels MapSearch::expand(const std::vector<int>& val) const {
  const TauSSet& y = spec_.target;
  Levels lv(top_ + 1);
  for (int k = 0; k <= top_; ++k) {
    lv[k].resize(ez_[k].size());
    for (std::size_t s = 0; s < ez_[k].size(); ++s) {
      const auto& e = ez_[k][s];
      int v = val[var_of_[e.dim][e.simplex]];
      lv[k][s] = e.dim == k ? v : y.apply_degeneracy(e.dim, v, e.surj);
    }
  }
  return lv;
}

bool extend_levels(const TauSSet& source, const TauSSet& target, std::vector<std::vector<int>>& lv, int k) {
  std::vector<int> bd;
  for (int j = static_cast<int>(lv.size()); j <= k; ++j) {
    std::vector<int> cur(source.count(j));
    bd.resize(j + 1);
    for (int s = 0; s < source.count(j); ++s) {
      for (int i = 0; i <= j; ++i) bd[i] = lv[j - 1][source.d(j, i, s)];
      auto r = target.with_boundary(j, bd);
      if (r.empty()) return false;
      cur[s] = r[0];
    }
    lv.push_back(std::move(cur));
  }
  return true;
}

bool MapSearch::check_high(const Levels& lv) const {
  if (high_fixed_.empty()) return true;
  int kmax = 0;
  for (auto& [k, s, v] : high_fixed_) kmax = std::max(kmax, k);
  Levels ext = lv;
  if (!extend_levels(spec_.source, spec_.target, ext, kmax)) return false;
  for (auto& [k, s, v] : high_fixed_)
    if (ext[k][s] != v) return false;
  return true;
}

std::size_t MapSearch::enumerate(const Visitor& visit) const {
  const TauSSet& y = spec_.target;
  const std::size_t max_nodes = spec_.max_nodes ? spec_.max_nodes : global_budget().max_search_nodes;
  const int nv = static_cast<int>(order_.size());
  std::vector<int> val(vars_.size(), -1);
  std::vector<std::vector<int>> dom(nv);
  std::vector<std::size_t> pos(nv, 0);
  std::size_t nodes = 0, found = 0;
  std::vector<int> bd;

  auto domain = [&](int a) {
    const Var& v = vars_[a];
    std::vector<int> out;
    auto accept = [&](int c) {
      if (v.fixed >= 0 && c != v.fixed) return false;
      for (auto& [surj, want] : v.degenerate_fixed)
        if (y.apply_degeneracy(v.dim, c, surj) != want) return false;
      if (spec_.allow && !spec_.allow(v.dim, v.simplex, c)) return false;
      return true;
    };
    if (v.dim == 0) {
      if (v.fixed >= 0) {
        if (v.fixed < y.count(0) && accept(v.fixed)) out.push_back(v.fixed);
        return out;
      }
      for (int c = 0; c < y.count(0); ++c)
        if (accept(c)) out.push_back(c);
      return out;
    }
    bd.resize(v.dim + 1);
    for (int i = 0; i <= v.dim; ++i) {
      auto& [fv, r, sj] = v.faces[i];
      bd[i] = r == v.dim - 1 ? val[fv] : y.apply_degeneracy(r, val[fv], sj);
    }
    for (int c : y.with_boundary(v.dim, bd))
      if (accept(c)) out.push_back(c);
    return out;
  };

  if (nv == 0) {
    Levels lv = expand(val);
    if (check_high(lv)) {
      visit(lv);
      return 1;
    }
    return 0;
  }
  int depth = 0;
  dom[0] = domain(order_[0]);
  pos[0] = 0;
  while (depth >= 0) {
    if (pos[depth] >= dom[depth].size()) {
      val[order_[depth]] = -1;
      --depth;
      if (depth >= 0) ++pos[depth];
      continue;
    }
    if (++nodes > max_nodes) throw BudgetExceeded("map search exceeded " + std::to_string(max_nodes) + " nodes");
    val[order_[depth]] = dom[depth][pos[depth]];
    if (depth + 1 == nv) {
      Levels lv = expand(val);
      if (check_high(lv)) {
        ++found;
        if (!visit(lv)) return found;
      }
      ++pos[depth];
      continue;
    }
    ++depth;
    dom[depth] = domain(order_[depth]);
    pos[depth] = 0;
  }
  return found;
}

std::optional<SimplicialMap> MapSearch::first() const {
  std::optional<SimplicialMap> out;
  enumerate([&](const Levels& lv) {
    out = to_map(lv);
    return false;
  });
  return out;
}

std::size_t MapSearch::count(std::size_t limit) const {
  return enumerate([&, n = std::size_t{0}](const Levels&) mutable {
    if (++n > limit) throw BudgetExceeded("more than " + std::to_string(limit) + " maps");
    return true;
  });
}

SimplicialMap MapSearch::to_map(const Levels& levels) const {
  return SimplicialMap(spec_.source, spec_.target, levels);
}

std::vector<SimplicialMap> all_maps(const TauSSet& source, const TauSSet& target, std::size_t limit) {
  MapSearch ms(MapSearchSpec{source, target, {}, {}, 0});
  std::vector<SimplicialMap> out;
  ms.enumerate([&](const MapSearch::Levels& lv) {
    if (out.size() >= limit) throw BudgetExceeded("too many maps");
    out.push_back(ms.to_map(lv));
    return true;
  });
  return out;
}

std::optional<SimplicialMap> find_isomorphism(const TauSSet& a, const TauSSet& b, std::size_t max_nodes) {
  const int L = std::max(a.cosk_level(), b.cosk_level());
  for (int k = 0; k <= L; ++k)
    if (a.count(k) != b.count(k)) return std::nullopt;
  MapSearchSpec spec{a, b, {}, {}, max_nodes};
  // injective on vertices is necessary
  MapSearch ms(spec);
  std::optional<SimplicialMap> out;
  ms.enumerate([&](const MapSearch::Levels& lv) {
    for (int k = 0; k < static_cast<int>(lv.size()); ++k) {
      std::vector<char> hit(b.count(k), 0);
      for (int v : lv[k]) {
        if (hit[v]) return true;
        hit[v] = 1;
      }
    }
    SimplicialMap f = ms.to_map(lv);
    if (is_isomorphism(f)) {
      out = f;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace procat
