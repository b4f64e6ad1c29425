#include "procat/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

namespace procat {

namespace {

// Depth-first walk over the slots 0..k (skipping `skip`), slot `first` fixed
// by the caller. Candidates for slot j come from the face-prefix index of
// X_{k-1}, filtered on the positions the prefix could not cover.
class FamilyWalker {
 public:
  FamilyWalker(const TauSSet& x, int k, int skip) : x_(x), k_(k), skip_(skip), fam_(k + 1, -1), prefix_(k + 1) {}

  template <class F>
  bool walk_from(int slot, F&& leaf) {
    while (slot <= k_ && slot == skip_) ++slot;
    if (slot > k_) return leaf(static_cast<const std::vector<int>&>(fam_));
    if (k_ == 1) {
      for (int v = 0; v < x_.count(0); ++v) {
        fam_[slot] = v;
        if (!walk_from(slot + 1, leaf)) return false;
      }
      fam_[slot] = -1;
      return true;
    }
    for (int c : candidates(slot)) {
      fam_[slot] = c;
      if (!walk_from(slot + 1, leaf)) {
        fam_[slot] = -1;
        return false;
      }
    }
    fam_[slot] = -1;
    return true;
  }

  // Candidates for slot j given the filled slots below it.
  std::vector<int> candidates(int j) {
    std::vector<int> out;
    if (k_ == 1) {
      out.resize(x_.count(0));
      for (int v = 0; v < x_.count(0); ++v) out[v] = v;
      return out;
    }
    // required: d_i y_j = d_{j-1} y_i for filled i < j
    const int plen = (skip_ >= 0 && skip_ < j) ? skip_ : j;
    for (int i = 0; i < plen; ++i) prefix_[i] = x_.d(k_ - 1, j - 1, fam_[i]);
    auto range = x_.with_face_prefix(k_ - 1, std::span<const int>(prefix_.data(), plen));
    for (int c : range) {
      bool ok = true;
      for (int i = plen + 1; i < j && ok; ++i)
        if (x_.d(k_ - 1, i, c) != x_.d(k_ - 1, j - 1, fam_[i])) ok = false;
      if (ok) out.push_back(c);
    }
    return out;
  }

  void set(int slot, int v) { fam_[slot] = v; }
  int first_slot() const { return skip_ == 0 ? 1 : 0; }

 private:
  const TauSSet& x_;
  int k_;
  int skip_;
  std::vector<int> fam_;
  std::vector<int> prefix_;
};

void prepare(const TauSSet& x, int k) {
  x.level(k - 1);
  if (k >= 2) x.with_face_prefix(k - 1, {});
}

// Runs body(c_index, candidate) over the first-slot candidates, serially or
// with OpenMP, rethrowing the first captured exception.
template <class Body>
void run_candidates(const std::vector<int>& cands, Exec exec, Body&& body) {
  const int n = static_cast<int>(cands.size());
  if (exec == Exec::Serial || n < 2) {
    for (int c = 0; c < n; ++c) body(c, cands[c]);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n; ++c) {
    try {
      body(c, cands[c]);
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

void for_each_family(const TauSSet& x, int k, int skip, Exec exec, const FamilyVisitor& visit) {
  if (k < 1) throw PreconditionError("families start at level 1");
  if (skip > k) throw PreconditionError("horn index out of range");
  prepare(x, k);
  FamilyWalker root(x, k, skip);
  const int first = root.first_slot();
  if (first > k) return;  // k = 0 horn, not used
  const std::vector<int> cands = root.candidates(first);
  run_candidates(cands, exec, [&](int, int c) {
    FamilyWalker w(x, k, skip);
    w.set(first, c);
    w.walk_from(first + 1, [&](const std::vector<int>& f) { return visit(c, f); });
  });
}

std::vector<int> compatible_families(const TauSSet& x, int k, int skip, Exec exec, std::size_t limit) {
  if (k < 1) throw PreconditionError("families start at level 1");
  prepare(x, k);
  FamilyWalker root(x, k, skip);
  const int first = root.first_slot();
  const std::vector<int> cands = root.candidates(first);
  std::vector<std::vector<int>> parts(cands.size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> over{false};
  run_candidates(cands, exec, [&](int ci, int c) {
    if (over.load(std::memory_order_relaxed)) return;
    FamilyWalker w(x, k, skip);
    w.set(first, c);
    auto& out = parts[ci];
    w.walk_from(first + 1, [&](const std::vector<int>& f) {
      out.insert(out.end(), f.begin(), f.end());
      if (total.fetch_add(1, std::memory_order_relaxed) + 1 > limit) {
        over.store(true);
        return false;
      }
      return true;
    });
  });
  if (over.load()) throw BudgetExceeded("level " + std::to_string(k) + " exceeds the simplex budget of " + std::to_string(limit));
  std::vector<int> all;
  all.reserve(total.load() * (k + 1));
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

namespace {

// Walks all families with the given skip and returns the first one (in the
// canonical order) for which `bad` yields a failure record.
template <class Fail, class Check>
std::optional<Fail> first_failure(const TauSSet& x, int k, int skip, Exec exec, Check&& bad) {
  prepare(x, k);
  FamilyWalker root(x, k, skip);
  const int first = root.first_slot();
  const std::vector<int> cands = root.candidates(first);
  std::vector<std::optional<Fail>> found(cands.size());
  std::atomic<int> best{std::numeric_limits<int>::max()};
  run_candidates(cands, exec, [&](int ci, int c) {
    if (ci > best.load(std::memory_order_relaxed)) return;
    FamilyWalker w(x, k, skip);
    w.set(first, c);
    w.walk_from(first + 1, [&](const std::vector<int>& f) {
      if (ci > best.load(std::memory_order_relaxed)) return false;
      std::optional<Fail> r = bad(f);
      if (!r) return true;
      found[ci] = std::move(r);
      int cur = best.load();
      while (ci < cur && !best.compare_exchange_weak(cur, ci)) {
      }
      return false;
    });
  });
  const int b = best.load();
  if (b == std::numeric_limits<int>::max()) return std::nullopt;
  return found[b];
}

}  // namespace

std::optional<HornFailure> find_unfillable_horn(const TauSSet& x, int k, int i, Exec exec) {
  if (k < 1 || i < 0 || i > k) throw PreconditionError("bad horn");
  x.level(k);
  x.horn_fillers(k, i, std::vector<int>(k + 1, 0));  // build the index up front
  return first_failure<HornFailure>(x, k, i, exec, [&](const std::vector<int>& f) -> std::optional<HornFailure> {
    if (!x.horn_fillers(k, i, f).empty()) return std::nullopt;
    return HornFailure{k, i, f};
  });
}

std::optional<LiftFailure> find_unliftable_horn(const SimplicialMap& p, int k, int i, Exec exec) {
  if (k < 1 || i < 0 || i > k) throw PreconditionError("bad horn");
  const TauSSet& e = p.source();
  const TauSSet& b = p.target();
  p.level(k);
  e.horn_fillers(k, i, std::vector<int>(k + 1, 0));
  b.horn_fillers(k, i, std::vector<int>(k + 1, 0));
  return first_failure<LiftFailure>(e, k, i, exec, [&](const std::vector<int>& f) -> std::optional<LiftFailure> {
    std::vector<int> img = p.apply_boundary(k, f);
    auto lifts = e.horn_fillers(k, i, f);
    for (int bb : b.horn_fillers(k, i, img)) {
      bool ok = false;
      for (int cand : lifts)
        if (p(k, cand) == bb) {
          ok = true;
          break;
        }
      if (!ok) return LiftFailure{k, i, f, bb};
    }
    return std::nullopt;
  });
}

std::optional<LiftFailure> find_unliftable_boundary(const SimplicialMap& p, int k, Exec exec) {
  const TauSSet& e = p.source();
  const TauSSet& b = p.target();
  if (k == 0) {
    std::vector<char> hit(b.count(0), 0);
    for (int v : p.level(0)) hit[v] = 1;
    for (int v = 0; v < b.count(0); ++v)
      if (!hit[v]) return LiftFailure{0, -1, {}, v};
    return std::nullopt;
  }
  p.level(k);
  e.with_boundary(k, std::vector<int>(k + 1, 0));
  b.with_boundary(k, std::vector<int>(k + 1, 0));
  return first_failure<LiftFailure>(e, k, -1, exec, [&](const std::vector<int>& f) -> std::optional<LiftFailure> {
    std::vector<int> img = p.apply_boundary(k, f);
    auto lifts = e.with_boundary(k, f);
    for (int bb : b.with_boundary(k, img)) {
      bool ok = false;
      for (int cand : lifts)
        if (p(k, cand) == bb) {
          ok = true;
          break;
        }
      if (!ok) return LiftFailure{k, -1, f, bb};
    }
    return std::nullopt;
  });
}

}  // namespace procat
