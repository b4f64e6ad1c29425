#include "procat/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "procat/kernels.hpp"

namespace procat {

Budget& global_budget() {
  static Budget b;
  return b;
}

struct TauSSet::Impl {
  int n = 0;
  int stored = 0;
  std::array<std::unique_ptr<Level>, kMaxDim + 1> levels;
  std::atomic<int> materialized{0};
  std::mutex ext_mu;
  std::mutex idx_mu;
  std::array<std::atomic<const std::vector<int>*>, kMaxDim + 1> bindex{};
  std::array<std::unique_ptr<std::vector<int>>, kMaxDim + 1> bindex_own;
  std::array<std::array<std::atomic<const std::vector<int>*>, kMaxDim + 2>, kMaxDim + 1> hindex{};
  std::array<std::array<std::unique_ptr<std::vector<int>>, kMaxDim + 2>, kMaxDim + 1> hindex_own;
  std::array<std::atomic<const std::vector<char>*>, kMaxDim + 1> dflags{};
  std::array<std::unique_ptr<std::vector<char>>, kMaxDim + 1> dflags_own;
};

namespace {

std::string ident(const char* lhs, int a, int b, const char* rhs, int c, int e) {
  return std::string(lhs) + std::to_string(a) + " " + lhs + std::to_string(b) + " = " + rhs + std::to_string(c) +
         " " + rhs + std::to_string(e);
}

std::vector<int> sorted_by_faces(const Level& lv, int k, int skip) {
  std::vector<int> perm(lv.count);
  std::iota(perm.begin(), perm.end(), 0);
  const int w = k + 1;
  const int* f = lv.faces.data();
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    const int* fa = f + static_cast<std::size_t>(a) * w;
    const int* fb = f + static_cast<std::size_t>(b) * w;
    for (int i = 0; i < w; ++i) {
      if (i == skip) continue;
      if (fa[i] != fb[i]) return fa[i] < fb[i];
    }
    return false;
  });
  return perm;
}

// Range of perm whose face tuples (positions != skip, first `len` positions)
// compare equal to key.
std::span<const int> face_range(const std::vector<int>& perm, const Level& lv, int k, int skip, std::span<const int> key,
                                int len) {
  const int w = k + 1;
  const int* f = lv.faces.data();
  auto cmp = [&](int idx) {  // <0 if tuple(idx) < key, 0 equal, >0 greater
    const int* fa = f + static_cast<std::size_t>(idx) * w;
    for (int i = 0; i < len; ++i) {
      if (i == skip) continue;
      if (fa[i] != key[i]) return fa[i] < key[i] ? -1 : 1;
    }
    return 0;
  };
  auto lo = std::partition_point(perm.begin(), perm.end(), [&](int idx) { return cmp(idx) < 0; });
  auto hi = std::partition_point(lo, perm.end(), [&](int idx) { return cmp(idx) <= 0; });
  return std::span<const int>(perm.data() + (lo - perm.begin()), static_cast<std::size_t>(hi - lo));
}

}  // namespace

TauSSet::TauSSet(Truncated lv, int n, std::string name) : name_(std::move(name)) {
  if (lv.empty()) throw PreconditionError("a simplicial set needs at least level 0");
  if (n < 0) throw PreconditionError("negative coskeletal level");
  if (static_cast<int>(lv.size()) - 1 < n) throw PreconditionError("stored levels must reach the coskeletal level");
  if (static_cast<int>(lv.size()) > kMaxDim) throw PreconditionError("too many stored levels");
  for (std::size_t k = 0; k < lv.size(); ++k) {
    const Level& L = lv[k];
    if (L.count < 0) throw InvariantViolation("negative simplex count at level " + std::to_string(k));
    if (k == 0) {
      if (!L.faces.empty() || !L.degens.empty()) throw InvariantViolation("level 0 carries no faces or degeneracies");
      continue;
    }
    if (L.faces.size() != static_cast<std::size_t>(L.count) * (k + 1))
      throw InvariantViolation("face table at level " + std::to_string(k) + " has wrong size");
    if (L.degens.size() != static_cast<std::size_t>(lv[k - 1].count) * k)
      throw InvariantViolation("degeneracy table at level " + std::to_string(k) + " has wrong size");
    for (int v : L.faces)
      if (v < 0 || v >= lv[k - 1].count) throw InvariantViolation("face index out of range at level " + std::to_string(k));
    for (int v : L.degens)
      if (v < 0 || v >= L.count) throw InvariantViolation("degeneracy index out of range at level " + std::to_string(k));
  }
  impl_ = std::make_shared<Impl>();
  impl_->n = n;
  impl_->stored = static_cast<int>(lv.size()) - 1;
  for (std::size_t k = 0; k < lv.size(); ++k) impl_->levels[k] = std::make_unique<Level>(std::move(lv[k]));
  impl_->materialized.store(impl_->stored + 1, std::memory_order_release);
  check_identities(impl_->stored);
  for (int k = n + 1; k <= impl_->stored; ++k) {
    const auto& idx = boundary_index(k);
    const Level& L = level(k);
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (std::equal(L.faces.begin() + static_cast<std::ptrdiff_t>(idx[t - 1]) * (k + 1),
                     L.faces.begin() + static_cast<std::ptrdiff_t>(idx[t - 1] + 1) * (k + 1),
                     L.faces.begin() + static_cast<std::ptrdiff_t>(idx[t]) * (k + 1)))
        throw InvariantViolation("level " + std::to_string(k) + " has two simplices with the same boundary above the coskeletal level");
    std::size_t fam = 0;
    for_each_family(*this, k, -1, Exec::Serial, [&](int, const std::vector<int>&) {
      ++fam;
      return true;
    });
    if (fam != static_cast<std::size_t>(L.count))
      throw InvariantViolation("level " + std::to_string(k) + " is not the coskeletal extension of level " +
                               std::to_string(k - 1) + " (" + std::to_string(L.count) + " simplices, " +
                               std::to_string(fam) + " boundary families)");
  }
}

int TauSSet::cosk_level() const { return impl_->n; }
int TauSSet::stored_dim() const { return impl_->stored; }
const std::string& TauSSet::name() const { return name_; }
TauSSet TauSSet::renamed(std::string name) const {
  TauSSet t = *this;
  t.name_ = std::move(name);
  return t;
}

const Level& TauSSet::level(int k) const {
  if (k < 0) throw PreconditionError("negative level");
  if (k >= impl_->materialized.load(std::memory_order_acquire)) materialize(k);
  return *impl_->levels[k];
}

void TauSSet::materialize(int k) const {
  if (k > kMaxDim) throw BudgetExceeded("requested level " + std::to_string(k) + " exceeds the dimension cap");
  std::lock_guard<std::mutex> lk(impl_->ext_mu);
  for (int j = impl_->materialized.load(std::memory_order_acquire); j <= k; ++j) {
    const std::size_t limit = global_budget().max_simplices_per_level;
    std::vector<int> fam = compatible_families(*this, j, -1, Exec::Parallel, limit);
    auto L = std::make_unique<Level>();
    L->count = static_cast<int>(fam.size() / (j + 1));
    L->faces = std::move(fam);
    std::vector<int> idx = sorted_by_faces(*L, j, -1);
    const Level& prev = *impl_->levels[j - 1];
    const Level* prev2 = j >= 2 ? impl_->levels[j - 2].get() : nullptr;
    L->degens.resize(static_cast<std::size_t>(prev.count) * j);
    std::vector<int> bd(j + 1);
    for (int i = 0; i < j; ++i)
      for (int y = 0; y < prev.count; ++y) {
        for (int t = 0; t <= j; ++t) {
          if (t == i || t == i + 1) {
            bd[t] = y;
          } else if (t < i) {
            int f = prev.faces[static_cast<std::size_t>(y) * j + t];
            bd[t] = prev.degens[static_cast<std::size_t>(i - 1) * prev2->count + f];
          } else {
            int f = prev.faces[static_cast<std::size_t>(y) * j + (t - 1)];
            bd[t] = prev.degens[static_cast<std::size_t>(i) * prev2->count + f];
          }
        }
        auto r = face_range(idx, *L, j, -1, bd, j + 1);
        if (r.size() != 1) throw InvariantViolation("degenerate boundary family has no unique filler");
        L->degens[static_cast<std::size_t>(i) * prev.count + y] = r[0];
      }
    {
      std::lock_guard<std::mutex> lk2(impl_->idx_mu);
      impl_->bindex_own[j] = std::make_unique<std::vector<int>>(std::move(idx));
      impl_->bindex[j].store(impl_->bindex_own[j].get(), std::memory_order_release);
    }
    impl_->levels[j] = std::move(L);
    impl_->materialized.store(j + 1, std::memory_order_release);
  }
}

void TauSSet::check_identities(int top) const {
  for (int k = 1; k <= top; ++k) {
    const Level& L = level(k);
    const Level& P = level(k - 1);
    auto dd = [&](int lev, int i, int x) { return level(lev).faces[static_cast<std::size_t>(x) * (lev + 1) + i]; };
    auto ss = [&](int lev, int i, int y) {  // s_i: X_lev -> X_{lev+1}
      return level(lev + 1).degens[static_cast<std::size_t>(i) * level(lev).count + y];
    };
    if (k >= 2)
      for (int x = 0; x < L.count; ++x)
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            if (dd(k - 1, i, dd(k, j, x)) != dd(k - 1, j - 1, dd(k, i, x)))
              throw InvariantViolation("simplicial identity " + ident("d", i, j, "d", j - 1, i) + " fails at level " +
                                       std::to_string(k) + " on simplex " + std::to_string(x));
    for (int j = 0; j < k; ++j)
      for (int y = 0; y < P.count; ++y) {
        int z = ss(k - 1, j, y);
        for (int i = 0; i <= k; ++i) {
          int lhs = dd(k, i, z);
          int rhs;
          std::string name;
          if (i == j || i == j + 1) {
            rhs = y;
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = id";
          } else if (i < j) {
            rhs = ss(k - 2, j - 1, dd(k - 1, i, y));
            name = ident("d", i, j, "s", j - 1, i);
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j - 1) + " d" +
                   std::to_string(i);
          } else {
            rhs = ss(k - 2, j, dd(k - 1, i - 1, y));
            name = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) + " d" +
                   std::to_string(i - 1);
          }
          if (lhs != rhs)
            throw InvariantViolation("simplicial identity " + name + " fails at level " + std::to_string(k) +
                                     " on simplex " + std::to_string(y));
        }
      }
    if (k >= 2)
      for (int j = 0; j <= k - 2; ++j)
        for (int i = 0; i <= j; ++i)
          for (int y = 0; y < level(k - 2).count; ++y)
            if (ss(k - 1, i, ss(k - 2, j, y)) != ss(k - 1, j + 1, ss(k - 2, i, y)))
              throw InvariantViolation("simplicial identity s" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                                       std::to_string(j + 1) + " s" + std::to_string(i) + " fails at level " +
                                       std::to_string(k) + " on simplex " + std::to_string(y));
  }
}

std::vector<int> TauSSet::boundary(int k, int x) const {
  const Level& L = level(k);
  return std::vector<int>(L.faces.begin() + static_cast<std::ptrdiff_t>(x) * (k + 1),
                          L.faces.begin() + static_cast<std::ptrdiff_t>(x + 1) * (k + 1));
}

const std::vector<int>& TauSSet::boundary_index(int k) const {
  if (k < 1) throw PreconditionError("boundary index needs k >= 1");
  const Level& L = level(k);
  if (auto* p = impl_->bindex[k].load(std::memory_order_acquire)) return *p;
  std::lock_guard<std::mutex> lk(impl_->idx_mu);
  if (auto* p = impl_->bindex[k].load(std::memory_order_acquire)) return *p;
  impl_->bindex_own[k] = std::make_unique<std::vector<int>>(sorted_by_faces(L, k, -1));
  impl_->bindex[k].store(impl_->bindex_own[k].get(), std::memory_order_release);
  return *impl_->bindex_own[k];
}

const std::vector<int>& TauSSet::horn_index(int k, int i) const {
  if (k < 1 || i < 0 || i > k) throw PreconditionError("bad horn");
  const Level& L = level(k);
  if (auto* p = impl_->hindex[k][i].load(std::memory_order_acquire)) return *p;
  std::lock_guard<std::mutex> lk(impl_->idx_mu);
  if (auto* p = impl_->hindex[k][i].load(std::memory_order_acquire)) return *p;
  impl_->hindex_own[k][i] = std::make_unique<std::vector<int>>(sorted_by_faces(L, k, i));
  impl_->hindex[k][i].store(impl_->hindex_own[k][i].get(), std::memory_order_release);
  return *impl_->hindex_own[k][i];
}

const std::vector<char>& TauSSet::degenerate_flags(int k) const {
  const Level& L = level(k);
  if (k > 0) level(k - 1);
  if (auto* p = impl_->dflags[k].load(std::memory_order_acquire)) return *p;
  std::vector<char> fl(L.count, 0);
  for (int x = 0; x < L.count && k > 0; ++x)
    for (int j = 0; j < k; ++j)
      if (s(k - 1, j, d(k, j, x)) == x) {
        fl[x] = 1;
        break;
      }
  std::lock_guard<std::mutex> lk(impl_->idx_mu);
  if (auto* p = impl_->dflags[k].load(std::memory_order_acquire)) return *p;
  impl_->dflags_own[k] = std::make_unique<std::vector<char>>(std::move(fl));
  impl_->dflags[k].store(impl_->dflags_own[k].get(), std::memory_order_release);
  return *impl_->dflags_own[k];
}

std::span<const int> TauSSet::with_boundary(int k, std::span<const int> faces) const {
  if (static_cast<int>(faces.size()) != k + 1) throw PreconditionError("boundary has wrong length");
  const auto& idx = boundary_index(k);
  return face_range(idx, level(k), k, -1, faces, k + 1);
}

std::optional<int> TauSSet::find_by_boundary(int k, std::span<const int> faces) const {
  auto r = with_boundary(k, faces);
  if (r.empty()) return std::nullopt;
  return r[0];
}

std::span<const int> TauSSet::with_face_prefix(int k, std::span<const int> prefix) const {
  const auto& idx = boundary_index(k);
  if (prefix.empty()) return std::span<const int>(idx.data(), idx.size());
  return face_range(idx, level(k), k, -1, prefix, static_cast<int>(prefix.size()));
}

std::span<const int> TauSSet::horn_fillers(int k, int i, std::span<const int> faces) const {
  if (static_cast<int>(faces.size()) != k + 1) throw PreconditionError("horn has wrong length");
  const auto& idx = horn_index(k, i);
  return face_range(idx, level(k), k, i, faces, k + 1);
}

bool TauSSet::is_degenerate(int k, int x) const { return degenerate_flags(k)[x] != 0; }

std::vector<int> TauSSet::nondegenerate(int k) const {
  const auto& fl = degenerate_flags(k);
  std::vector<int> r;
  for (int x = 0; x < static_cast<int>(fl.size()); ++x)
    if (!fl[x]) r.push_back(x);
  return r;
}

int TauSSet::num_nondegenerate(int k) const {
  const auto& fl = degenerate_flags(k);
  return static_cast<int>(std::count(fl.begin(), fl.end(), 0));
}

TauSSet::EZ TauSSet::decompose(int k, int x) const {
  std::vector<int> js;
  int cur = x, dim = k;
  while (dim > 0 && is_degenerate(dim, cur)) {
    for (int j = 0; j < dim; ++j) {
      int y = d(dim, j, cur);
      if (s(dim - 1, j, y) == cur) {
        js.push_back(j);
        cur = y;
        --dim;
        break;
      }
    }
  }
  SimplexOp surj(k + 1);
  std::iota(surj.begin(), surj.end(), 0);
  for (int j : js)
    for (int& v : surj)
      if (v > j) --v;
  return EZ{dim, cur, std::move(surj)};
}

int TauSSet::apply_degeneracy(int r, int y, const SimplexOp& surj) const {
  const int k = static_cast<int>(surj.size()) - 1;
  if (k == r) return y;
  for (int t = 0; t < k; ++t)
    if (surj[t] == surj[t + 1]) {
      SimplexOp b(surj);
      b.erase(b.begin() + t + 1);
      return s(k - 1, t, apply_degeneracy(r, y, b));
    }
  throw PreconditionError("operator is not a surjection onto [r]");
}

int TauSSet::apply(int m, int x, const SimplexOp& op) const {
  std::vector<char> in(m + 1, 0);
  for (std::size_t t = 0; t < op.size(); ++t) {
    if (op[t] < 0 || op[t] > m || (t > 0 && op[t] < op[t - 1])) throw PreconditionError("operator is not monotone into [m]");
    in[op[t]] = 1;
  }
  int cur = x, dim = m;
  for (int v = m; v >= 0; --v)
    if (!in[v]) {
      cur = d(dim, v, cur);
      --dim;
    }
  std::vector<int> pos(m + 1, -1);
  int r = 0;
  for (int v = 0; v <= m; ++v)
    if (in[v]) pos[v] = r++;
  SimplexOp surj(op.size());
  for (std::size_t t = 0; t < op.size(); ++t) surj[t] = pos[op[t]];
  return apply_degeneracy(dim, cur, surj);
}

int TauSSet::degenerate_vertex(int k, int v) const {
  int cur = v;
  for (int j = 0; j < k; ++j) cur = s(j, 0, cur);
  return cur;
}

Truncated TauSSet::truncate(int m) const {
  Truncated t;
  for (int k = 0; k <= m; ++k) t.push_back(level(k));
  return t;
}

// ---------------------------------------------------------------------------

struct SimplicialMap::Impl {
  TauSSet src, tgt;
  std::array<std::unique_ptr<std::vector<int>>, kMaxDim + 1> lv;
  std::atomic<int> defined{0};
  std::mutex mu;
};

SimplicialMap::SimplicialMap(TauSSet source, TauSSet target, std::vector<std::vector<int>> levels) {
  if (!source.valid() || !target.valid()) throw PreconditionError("map between invalid objects");
  if (static_cast<int>(levels.size()) < target.cosk_level() + 1)
    throw PreconditionError("a map must be given through the target's coskeletal level");
  if (static_cast<int>(levels.size()) > kMaxDim) throw PreconditionError("too many map levels");
  const int L = static_cast<int>(levels.size()) - 1;
  for (int k = 0; k <= L; ++k) {
    if (static_cast<int>(levels[k].size()) != source.count(k))
      throw InvariantViolation("map level " + std::to_string(k) + " has wrong size");
    for (int v : levels[k])
      if (v < 0 || v >= target.count(k)) throw InvariantViolation("map value out of range at level " + std::to_string(k));
  }
  for (int k = 1; k <= L; ++k) {
    for (int x = 0; x < source.count(k); ++x)
      for (int i = 0; i <= k; ++i)
        if (target.d(k, i, levels[k][x]) != levels[k - 1][source.d(k, i, x)])
          throw InvariantViolation("map does not commute with d" + std::to_string(i) + " at level " + std::to_string(k));
    for (int y = 0; y < source.count(k - 1); ++y)
      for (int i = 0; i < k; ++i)
        if (levels[k][source.s(k - 1, i, y)] != target.s(k - 1, i, levels[k - 1][y]))
          throw InvariantViolation("map does not commute with s" + std::to_string(i) + " at level " + std::to_string(k - 1));
  }
  impl_ = std::make_shared<Impl>();
  impl_->src = std::move(source);
  impl_->tgt = std::move(target);
  for (int k = 0; k <= L; ++k) impl_->lv[k] = std::make_unique<std::vector<int>>(std::move(levels[k]));
  impl_->defined.store(L + 1, std::memory_order_release);
}

const TauSSet& SimplicialMap::source() const { return impl_->src; }
const TauSSet& SimplicialMap::target() const { return impl_->tgt; }
int SimplicialMap::defined_dim() const { return impl_->defined.load(std::memory_order_acquire) - 1; }

const std::vector<int>& SimplicialMap::level(int k) const {
  if (k < 0) throw PreconditionError("negative level");
  if (k < impl_->defined.load(std::memory_order_acquire)) return *impl_->lv[k];
  if (k > kMaxDim) throw BudgetExceeded("map level beyond the dimension cap");
  std::lock_guard<std::mutex> lk(impl_->mu);
  for (int j = impl_->defined.load(std::memory_order_acquire); j <= k; ++j) {
    const TauSSet& S = impl_->src;
    const TauSSet& T = impl_->tgt;
    const std::vector<int>& prev = *impl_->lv[j - 1];
    auto out = std::make_unique<std::vector<int>>(S.count(j));
    std::vector<int> bd(j + 1);
    for (int x = 0; x < S.count(j); ++x) {
      for (int i = 0; i <= j; ++i) bd[i] = prev[S.d(j, i, x)];
      auto r = T.with_boundary(j, bd);
      if (r.empty()) throw InvariantViolation("map does not extend to level " + std::to_string(j));
      (*out)[x] = r[0];
    }
    impl_->lv[j] = std::move(out);
    impl_->defined.store(j + 1, std::memory_order_release);
  }
  return *impl_->lv[k];
}

int SimplicialMap::operator()(int k, int x) const { return level(k)[x]; }

std::vector<int> SimplicialMap::apply_boundary(int k, std::span<const int> faces) const {
  std::vector<int> r(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) r[i] = faces[i] < 0 ? -1 : (*this)(k - 1, faces[i]);
  return r;
}

SimplicialMap SimplicialMap::identity(const TauSSet& x) {
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= x.cosk_level(); ++k) {
    std::vector<int> v(x.count(k));
    std::iota(v.begin(), v.end(), 0);
    lv.push_back(std::move(v));
  }
  return SimplicialMap(x, x, std::move(lv));
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& g, const SimplicialMap& f) {
  const int L = std::max(g.target().cosk_level(), f.source().cosk_level());
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= L; ++k) {
    if (f.target().count(k) != g.source().count(k)) throw PreconditionError("maps are not composable");
    std::vector<int> v(f.source().count(k));
    for (int x = 0; x < static_cast<int>(v.size()); ++x) v[x] = g(k, f(k, x));
    lv.push_back(std::move(v));
  }
  return SimplicialMap(f.source(), g.target(), std::move(lv));
}

SimplicialMap SimplicialMap::constant(const TauSSet& source, const TauSSet& target, int vertex) {
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= std::max(source.cosk_level(), target.cosk_level()); ++k)
    lv.emplace_back(source.count(k), target.degenerate_vertex(k, vertex));
  return SimplicialMap(source, target, std::move(lv));
}

bool maps_equal(const SimplicialMap& f, const SimplicialMap& g) {
  const int L = std::max(f.source().cosk_level(), f.target().cosk_level());
  for (int k = 0; k <= L; ++k) {
    if (f.source().count(k) != g.source().count(k) || f.target().count(k) != g.target().count(k)) return false;
    if (f.level(k) != g.level(k)) return false;
  }
  return true;
}

bool is_isomorphism(const SimplicialMap& f) {
  const int L = std::max(f.source().cosk_level(), f.target().cosk_level());
  for (int k = 0; k <= L; ++k) {
    if (f.source().count(k) != f.target().count(k)) return false;
    std::vector<char> hit(f.target().count(k), 0);
    for (int v : f.level(k)) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

SimplicialMap inverse(const SimplicialMap& f) {
  if (!is_isomorphism(f)) throw PreconditionError("map is not an isomorphism");
  const int L = std::max(f.source().cosk_level(), f.target().cosk_level());
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= L; ++k) {
    std::vector<int> v(f.target().count(k));
    const auto& fl = f.level(k);
    for (int x = 0; x < static_cast<int>(fl.size()); ++x) v[fl[x]] = x;
    lv.push_back(std::move(v));
  }
  return SimplicialMap(f.target(), f.source(), std::move(lv));
}

// ---------------------------------------------------------------------------

TauSSet coskeleton(const Truncated& t, int m, std::string name) {
  if (static_cast<int>(t.size()) < m + 1) throw PreconditionError("truncation shorter than the coskeleton level");
  Truncated lv(t.begin(), t.begin() + m + 1);
  return TauSSet(std::move(lv), m, std::move(name));
}

SimplicialMap coskeleton_unit(const TauSSet& x, int m) {
  TauSSet c = coskeleton(x.truncate(m), m, "cosk" + std::to_string(m) + "(" + x.name() + ")");
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> v(x.count(k));
    std::iota(v.begin(), v.end(), 0);
    lv.push_back(std::move(v));
  }
  SimplicialMap u(x, c, std::move(lv));
  u.level(std::max(m, x.cosk_level()));
  return u;
}

TauSSet point() {
  Level l0;
  l0.count = 1;
  return TauSSet({l0}, 0, "pt");
}

TauSSet discrete(int size) {
  if (size < 0) throw PreconditionError("negative size");
  Level l0, l1;
  l0.count = size;
  l1.count = size;
  for (int x = 0; x < size; ++x) {
    l1.faces.push_back(x);
    l1.faces.push_back(x);
  }
  for (int x = 0; x < size; ++x) l1.degens.push_back(x);
  return TauSSet({l0, l1}, size <= 1 ? 0 : 1, "K(" + std::to_string(size) + ",0)");
}

int StdSimplex::index_of(const SimplexOp& seq) const {
  const int k = static_cast<int>(seq.size()) - 1;
  const auto& v = seqs[k];
  auto it = std::lower_bound(v.begin(), v.end(), seq);
  if (it == v.end() || *it != seq) throw PreconditionError("not a simplex of the standard simplex");
  return static_cast<int>(it - v.begin());
}

StdSimplex standard_simplex(int m, int stored_dim) {
  StdSimplex out;
  out.m = m;
  const int L = std::max(stored_dim, 1);
  out.seqs.resize(L + 1);
  for (int k = 0; k <= L; ++k) {
    SimplexOp cur(k + 1, 0);
    for (;;) {
      out.seqs[k].push_back(cur);
      int p = k;
      while (p >= 0 && cur[p] == m) --p;
      if (p < 0) break;
      int v = cur[p] + 1;
      for (int q = p; q <= k; ++q) cur[q] = v;
    }
  }
  Truncated lv(L + 1);
  for (int k = 0; k <= L; ++k) {
    lv[k].count = static_cast<int>(out.seqs[k].size());
    if (k == 0) continue;
    for (const auto& sq : out.seqs[k])
      for (int i = 0; i <= k; ++i) {
        SimplexOp f(sq);
        f.erase(f.begin() + i);
        lv[k].faces.push_back(out.index_of(f));
      }
    for (int i = 0; i < k; ++i)
      for (const auto& sq : out.seqs[k - 1]) {
        SimplexOp g(sq);
        g.insert(g.begin() + i, sq[i]);
        lv[k].degens.push_back(out.index_of(g));
      }
  }
  out.sset = TauSSet(std::move(lv), m == 0 ? 0 : 1, "Delta^" + std::to_string(m));
  return out;
}

Product product(const TauSSet& x, const TauSSet& y, int stored_dim) {
  const int n = std::max(x.cosk_level(), y.cosk_level());
  const int L = std::max(n, stored_dim);
  Truncated lv(L + 1);
  for (int k = 0; k <= L; ++k) {
    const int cx = x.count(k), cy = y.count(k);
    if (static_cast<long long>(cx) * cy > static_cast<long long>(global_budget().max_simplices_per_level))
      throw BudgetExceeded("product level " + std::to_string(k) + " too large");
    lv[k].count = cx * cy;
    if (k == 0) continue;
    const int px = x.count(k - 1), py = y.count(k - 1);
    lv[k].faces.resize(static_cast<std::size_t>(cx) * cy * (k + 1));
    for (int a = 0; a < cx; ++a)
      for (int b = 0; b < cy; ++b)
        for (int i = 0; i <= k; ++i)
          lv[k].faces[(static_cast<std::size_t>(a) * cy + b) * (k + 1) + i] = x.d(k, i, a) * py + y.d(k, i, b);
    lv[k].degens.resize(static_cast<std::size_t>(px) * py * k);
    for (int i = 0; i < k; ++i)
      for (int a = 0; a < px; ++a)
        for (int b = 0; b < py; ++b)
          lv[k].degens[static_cast<std::size_t>(i) * px * py + static_cast<std::size_t>(a) * py + b] =
              x.s(k - 1, i, a) * cy + y.s(k - 1, i, b);
  }
  Product p;
  p.object = TauSSet(std::move(lv), n, "(" + x.name() + " x " + y.name() + ")");
  std::vector<std::vector<int>> l1, l2;
  for (int k = 0; k <= L; ++k) {
    const int cy = y.count(k);
    std::vector<int> v1(p.object.count(k)), v2(p.object.count(k));
    for (int id = 0; id < p.object.count(k); ++id) {
      v1[id] = id / cy;
      v2[id] = id % cy;
    }
    l1.push_back(std::move(v1));
    l2.push_back(std::move(v2));
  }
  p.pr1 = SimplicialMap(p.object, x, std::move(l1));
  p.pr2 = SimplicialMap(p.object, y, std::move(l2));
  return p;
}

SimplicialMap pair_map(const Product& p, const SimplicialMap& f, const SimplicialMap& g) {
  const TauSSet& z = f.source();
  const int L = std::max(p.object.cosk_level(), z.cosk_level());
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= L; ++k) {
    std::vector<int> v(z.count(k));
    if (k <= p.object.stored_dim()) {
      const int cy = p.pr2.target().count(k);
      for (int w = 0; w < z.count(k); ++w) v[w] = f(k, w) * cy + g(k, w);
    } else {
      std::vector<int> bd(k + 1);
      for (int w = 0; w < z.count(k); ++w) {
        for (int i = 0; i <= k; ++i) bd[i] = lv[k - 1][z.d(k, i, w)];
        auto r = p.object.with_boundary(k, bd);
        if (r.empty()) throw InvariantViolation("pairing does not extend");
        v[w] = r[0];
      }
    }
    lv.push_back(std::move(v));
  }
  return SimplicialMap(z, p.object, std::move(lv));
}

SimplicialMap product_map(const Product& src, const Product& dst, const SimplicialMap& f, const SimplicialMap& g) {
  return pair_map(dst, SimplicialMap::compose(f, src.pr1), SimplicialMap::compose(g, src.pr2));
}

Pullback pullback(const SimplicialMap& f, const SimplicialMap& g, int stored_dim) {
  const TauSSet& x = f.source();
  const TauSSet& y = g.source();
  const TauSSet& z = f.target();
  const int n = std::max({x.cosk_level(), y.cosk_level(), z.cosk_level(), g.target().cosk_level()});
  const int L = std::max(n, stored_dim);
  for (int k = 0; k <= L; ++k)
    if (z.count(k) != g.target().count(k)) throw PreconditionError("pullback legs have different targets");
  Truncated lv(L + 1);
  std::vector<std::vector<std::pair<int, int>>> pairs(L + 1);
  std::vector<std::unordered_map<long long, int>> lookup(L + 1);
  for (int k = 0; k <= L; ++k) {
    std::vector<std::vector<int>> by_val(z.count(k));
    for (int b = 0; b < y.count(k); ++b) by_val[g(k, b)].push_back(b);
    for (int a = 0; a < x.count(k); ++a)
      for (int b : by_val[f(k, a)]) {
        lookup[k][static_cast<long long>(a) * y.count(k) + b] = static_cast<int>(pairs[k].size());
        pairs[k].emplace_back(a, b);
      }
    if (pairs[k].size() > global_budget().max_simplices_per_level)
      throw BudgetExceeded("pullback level " + std::to_string(k) + " too large");
    lv[k].count = static_cast<int>(pairs[k].size());
    if (k == 0) continue;
    for (auto [a, b] : pairs[k])
      for (int i = 0; i <= k; ++i)
        lv[k].faces.push_back(lookup[k - 1].at(static_cast<long long>(x.d(k, i, a)) * y.count(k - 1) + y.d(k, i, b)));
    lv[k].degens.resize(pairs[k - 1].size() * k);
    for (int i = 0; i < k; ++i)
      for (std::size_t t = 0; t < pairs[k - 1].size(); ++t) {
        auto [a, b] = pairs[k - 1][t];
        lv[k].degens[i * pairs[k - 1].size() + t] =
            lookup[k].at(static_cast<long long>(x.s(k - 1, i, a)) * y.count(k) + y.s(k - 1, i, b));
      }
  }
  Pullback p;
  p.object = TauSSet(std::move(lv), n, "(" + x.name() + " x_" + z.name() + " " + y.name() + ")");
  std::vector<std::vector<int>> l1(L + 1), l2(L + 1);
  for (int k = 0; k <= L; ++k)
    for (auto [a, b] : pairs[k]) {
      l1[k].push_back(a);
      l2[k].push_back(b);
    }
  p.pr1 = SimplicialMap(p.object, x, std::move(l1));
  p.pr2 = SimplicialMap(p.object, y, std::move(l2));
  return p;
}

SimplicialMap pullback_pair(const Pullback& p, const SimplicialMap& a, const SimplicialMap& b) {
  const TauSSet& w = a.source();
  const int L = std::max(p.object.cosk_level(), w.cosk_level());
  std::vector<std::vector<int>> lv;
  for (int k = 0; k <= L; ++k) {
    std::unordered_map<long long, int> lookup;
    const int cy = p.pr2.target().count(k);
    for (int t = 0; t < p.object.count(k); ++t) lookup[static_cast<long long>(p.pr1(k, t)) * cy + p.pr2(k, t)] = t;
    std::vector<int> v(w.count(k));
    for (int u = 0; u < w.count(k); ++u) {
      auto it = lookup.find(static_cast<long long>(a(k, u)) * cy + b(k, u));
      if (it == lookup.end()) throw PreconditionError("pair does not land in the pullback (square does not commute)");
      v[u] = it->second;
    }
    lv.push_back(std::move(v));
  }
  return SimplicialMap(w, p.object, std::move(lv));
}

DiagramLimit diagram_limit(const FinDiagram& dg) {
  const int r = static_cast<int>(dg.objects.size());
  if (r == 0) {
    DiagramLimit out;
    out.object = point();
    return out;
  }
  // topological order: sources of edges before their targets
  std::vector<int> indeg(r, 0);
  std::vector<std::vector<int>> out_edges(r), in_edges(r);
  for (int e = 0; e < static_cast<int>(dg.edges.size()); ++e) {
    auto& [i, j, m] = dg.edges[e];
    (void)m;
    out_edges[i].push_back(e);
    in_edges[j].push_back(e);
    ++indeg[j];
  }
  std::vector<int> order;
  {
    std::vector<int> deg = indeg;
    std::vector<int> q;
    for (int i = 0; i < r; ++i)
      if (deg[i] == 0) q.push_back(i);
    while (!q.empty()) {
      std::sort(q.begin(), q.end());
      int i = q.front();
      q.erase(q.begin());
      order.push_back(i);
      for (int e : out_edges[i]) {
        int j = std::get<1>(dg.edges[e]);
        if (--deg[j] == 0) q.push_back(j);
      }
    }
    if (static_cast<int>(order.size()) != r) throw PreconditionError("diagram edges contain a cycle");
  }
  int n = 0;
  for (const auto& o : dg.objects) n = std::max(n, o.cosk_level());
  const int L = n;
  Truncated lv(L + 1);
  std::vector<std::vector<std::vector<int>>> tuples(L + 1);
  std::vector<std::map<std::vector<int>, int>> lookup(L + 1);
  for (int k = 0; k <= L; ++k) {
    std::vector<int> cur(r, -1);
    std::vector<int> pos_of(r);
    for (int t = 0; t < r; ++t) pos_of[order[t]] = t;
    // recursive enumeration along `order`
    std::function<void(int)> rec = [&](int t) {
      if (t == r) {
        lookup[k][cur] = static_cast<int>(tuples[k].size());
        tuples[k].push_back(cur);
        if (tuples[k].size() > global_budget().max_simplices_per_level) throw BudgetExceeded("limit level too large");
        return;
      }
      const int j = order[t];
      if (in_edges[j].empty()) {
        for (int v = 0; v < dg.objects[j].count(k); ++v) {
          cur[j] = v;
          rec(t + 1);
        }
        cur[j] = -1;
        return;
      }
      int forced = -1;
      for (int e : in_edges[j]) {
        const auto& [i, jj, m] = dg.edges[e];
        (void)jj;
        int v = m(k, cur[i]);
        if (forced < 0)
          forced = v;
        else if (forced != v)
          return;
      }
      cur[j] = forced;
      rec(t + 1);
      cur[j] = -1;
    };
    rec(0);
    lv[k].count = static_cast<int>(tuples[k].size());
    if (k == 0) continue;
    std::vector<int> tmp(r);
    for (const auto& tp : tuples[k])
      for (int i = 0; i <= k; ++i) {
        for (int o = 0; o < r; ++o) tmp[o] = dg.objects[o].d(k, i, tp[o]);
        lv[k].faces.push_back(lookup[k - 1].at(tmp));
      }
    for (int i = 0; i < k; ++i)
      for (const auto& tp : tuples[k - 1]) {
        for (int o = 0; o < r; ++o) tmp[o] = dg.objects[o].s(k - 1, i, tp[o]);
        lv[k].degens.push_back(lookup[k].at(tmp));
      }
  }
  DiagramLimit out;
  out.object = TauSSet(std::move(lv), n, "lim");
  for (int o = 0; o < r; ++o) {
    std::vector<std::vector<int>> pl(L + 1);
    for (int k = 0; k <= L; ++k)
      for (const auto& tp : tuples[k]) pl[k].push_back(tp[o]);
    out.projections.emplace_back(out.object, dg.objects[o], std::move(pl));
  }
  return out;
}

SubObject subcomplex(const TauSSet& x, const std::vector<std::vector<char>>& member, int cosk_level) {
  const int L = static_cast<int>(member.size()) - 1;
  if (L < cosk_level) throw PreconditionError("membership must reach the coskeletal level");
  std::vector<std::vector<int>> newid(L + 1), oldid(L + 1);
  for (int k = 0; k <= L; ++k) {
    newid[k].assign(x.count(k), -1);
    for (int v = 0; v < x.count(k); ++v)
      if (member[k][v]) {
        newid[k][v] = static_cast<int>(oldid[k].size());
        oldid[k].push_back(v);
      }
  }
  Truncated lv(L + 1);
  for (int k = 0; k <= L; ++k) {
    lv[k].count = static_cast<int>(oldid[k].size());
    if (k == 0) continue;
    for (int v : oldid[k])
      for (int i = 0; i <= k; ++i) {
        int f = newid[k - 1][x.d(k, i, v)];
        if (f < 0) throw InvariantViolation("subcomplex is not closed under d" + std::to_string(i));
        lv[k].faces.push_back(f);
      }
    for (int i = 0; i < k; ++i)
      for (int v : oldid[k - 1]) {
        int g = newid[k][x.s(k - 1, i, v)];
        if (g < 0) throw InvariantViolation("subcomplex is not closed under s" + std::to_string(i));
        lv[k].degens.push_back(g);
      }
  }
  SubObject out;
  out.object = TauSSet(std::move(lv), cosk_level, "sub(" + x.name() + ")");
  out.inclusion = SimplicialMap(out.object, x, oldid);
  return out;
}

std::string describe_counts(const TauSSet& x, int top) {
  std::string s;
  for (int k = 0; k <= top; ++k) {
    if (k) s += ",";
    s += std::to_string(x.count(k));
  }
  return s;
}

}  // namespace procat
