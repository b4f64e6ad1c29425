#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "procat/common.hpp"

namespace procat {

constexpr int kMaxDim = 20;

/// Level X_k of a simplicial set. faces[x*(k+1)+i] = d_i x in X_{k-1};
/// degens[i*|X_{k-1}|+y] = s_i y for y in X_{k-1}. Both empty at k = 0.
struct Level {
  int count = 0;
  std::vector<int> faces;
  std::vector<int> degens;
};

using Truncated = std::vector<Level>;

/// A simplicial operator [k] -> [m] given by its (nondecreasing) values.
using SimplexOp = std::vector<int>;

/// Process-wide resource limits used by lazy level extension and searches.
Budget& global_budget();

/// Levelwise finite, n-coskeletal simplicial set. Levels up to stored_dim()
/// are held explicitly; higher levels are computed on demand as compatible
/// boundary families and memoized (write-once, thread safe). Copies share
/// the memo.
class TauSSet {
 public:
  TauSSet() = default;
  /// Validates the simplicial identities on every supplied level and that
  /// levels above `cosk_level` are the coskeletal extension of the ones
  /// below. Throws InvariantViolation naming the failing identity.
  TauSSet(Truncated levels, int cosk_level, std::string name = {});

  bool valid() const { return impl_ != nullptr; }
  int cosk_level() const;
  int stored_dim() const;
  const std::string& name() const;
  TauSSet renamed(std::string name) const;

  const Level& level(int k) const;
  int count(int k) const { return level(k).count; }
  int d(int k, int i, int x) const { return level(k).faces[static_cast<std::size_t>(x) * (k + 1) + i]; }
  /// s_i : X_k -> X_{k+1}
  int s(int k, int i, int y) const { return level(k + 1).degens[static_cast<std::size_t>(i) * count(k) + y]; }
  std::vector<int> boundary(int k, int x) const;

  /// Simplices of X_k with exactly the given faces (k >= 1).
  std::span<const int> with_boundary(int k, std::span<const int> faces) const;
  std::optional<int> find_by_boundary(int k, std::span<const int> faces) const;
  /// Simplices of X_k whose faces d_0..d_{p-1} equal the prefix.
  std::span<const int> with_face_prefix(int k, std::span<const int> prefix) const;
  /// Fillers of the horn Λ^k_i: `faces` has k+1 entries and entry i is ignored.
  std::span<const int> horn_fillers(int k, int i, std::span<const int> faces) const;

  bool is_degenerate(int k, int x) const;
  std::vector<int> nondegenerate(int k) const;
  int num_nondegenerate(int k) const;

  /// Eilenberg-Zilber: x = surj^*(simplex) with simplex nondegenerate of
  /// dimension dim, surj : [k] -> [dim] surjective.
  struct EZ {
    int dim;
    int simplex;
    SimplexOp surj;
  };
  EZ decompose(int k, int x) const;

  /// op^*(x) for x in X_m and op : [k] -> [m] nondecreasing.
  int apply(int m, int x, const SimplexOp& op) const;
  /// surj^*(y) for y in X_r and surj : [k] -> [r] surjective.
  int apply_degeneracy(int r, int y, const SimplexOp& surj) const;
  /// s_0^k v.
  int degenerate_vertex(int k, int v) const;

  Truncated truncate(int m) const;

  /// Checks the simplicial identities on levels 0..top (materializing them).
  void check_identities(int top) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::string name_;
  void materialize(int k) const;
  const std::vector<int>& boundary_index(int k) const;
  const std::vector<int>& horn_index(int k, int i) const;
  const std::vector<char>& degenerate_flags(int k) const;
};

/// Simplicial map, stored on levels 0..defined_dim() (at least the target's
/// coskeletal level) and extended above by boundary lookup in the target.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(TauSSet source, TauSSet target, std::vector<std::vector<int>> levels);

  static SimplicialMap identity(const TauSSet& x);
  /// g ∘ f
  static SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
  /// Map sending everything to the degeneracies of one target vertex.
  static SimplicialMap constant(const TauSSet& source, const TauSSet& target, int vertex);

  bool valid() const { return impl_ != nullptr; }
  const TauSSet& source() const;
  const TauSSet& target() const;
  int operator()(int k, int x) const;
  const std::vector<int>& level(int k) const;
  int defined_dim() const;
  std::vector<int> apply_boundary(int k, std::span<const int> faces) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

bool maps_equal(const SimplicialMap& f, const SimplicialMap& g);
/// Bijective on levels 0..max(n_source, n_target); both ends coskeletal so
/// this decides isomorphism.
bool is_isomorphism(const SimplicialMap& f);
/// Inverse of an isomorphism.
SimplicialMap inverse(const SimplicialMap& f);

// ---------------------------------------------------------------------------
// Constructions

/// cosk_m of the m-truncation given by levels 0..m of `t`.
TauSSet coskeleton(const Truncated& t, int m, std::string name = {});
/// Unit X -> cosk_m τ_m X.
SimplicialMap coskeleton_unit(const TauSSet& x, int m);

TauSSet point();
/// Discrete simplicial set on `size` points (K(S,0)).
TauSSet discrete(int size);

/// Δ^m with its simplices as nondecreasing vertex sequences.
struct StdSimplex {
  int m = 0;
  TauSSet sset;
  std::vector<std::vector<SimplexOp>> seqs;  // seqs[k][idx]
  int index_of(const SimplexOp& seq) const;
};
StdSimplex standard_simplex(int m, int stored_dim);

struct Product {
  TauSSet object;
  SimplicialMap pr1, pr2;
  int index(int k, int a, int b) const { return a * object_count_second(k) + b; }
  int object_count_second(int k) const { return pr2.target().count(k); }
};
/// X × Y stored on levels 0..max(n_X, n_Y, stored_dim); simplex (a, b) at a
/// stored level has id a*|Y_k| + b.
Product product(const TauSSet& x, const TauSSet& y, int stored_dim = 0);
/// Unique map Z -> X × Y with the given components.
SimplicialMap pair_map(const Product& p, const SimplicialMap& f, const SimplicialMap& g);
/// f × g : X × Y -> X' × Y'
SimplicialMap product_map(const Product& src, const Product& dst, const SimplicialMap& f, const SimplicialMap& g);

struct Pullback {
  TauSSet object;
  SimplicialMap pr1, pr2;  // to the sources of f and g
};
/// X ×_Z Y for f : X -> Z and g : Y -> Z.
Pullback pullback(const SimplicialMap& f, const SimplicialMap& g, int stored_dim = 0);
/// Map W -> X ×_Z Y induced by a commuting pair.
SimplicialMap pullback_pair(const Pullback& p, const SimplicialMap& a, const SimplicialMap& b);

/// Limit of a diagram of simplicial sets over a finite poset given by
/// objects and the maps for covering pairs (i > j). Returns the limit and its
/// projections.
struct DiagramLimit {
  TauSSet object;
  std::vector<SimplicialMap> projections;
};
struct FinDiagram {
  std::vector<TauSSet> objects;
  // edges (i, j, map X_i -> X_j) for i > j; transitive composites implied
  std::vector<std::tuple<int, int, SimplicialMap>> edges;
};
DiagramLimit diagram_limit(const FinDiagram& d);

/// Sub-simplicial set given by per-level membership, closed under faces and
/// degeneracies (checked). Returns the subobject and its inclusion.
struct SubObject {
  TauSSet object;
  SimplicialMap inclusion;
};
SubObject subcomplex(const TauSSet& x, const std::vector<std::vector<char>>& member, int cosk_level);

std::string describe_counts(const TauSSet& x, int top);

}  // namespace procat
