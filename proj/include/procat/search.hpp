#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "procat/sset.hpp"

namespace procat {

/// Search problem for simplicial maps source -> target. A map into an
/// n-coskeletal target is the same as a compatible assignment on the
/// nondegenerate simplices of dimension <= n, so the variables are exactly
/// those simplices.
struct MapSearchSpec {
  TauSSet source;
  TauSSet target;
  /// fixed[k][x] = required value of simplex x in level k, or -1. May be
  /// shorter than needed; any level (also above the target's coskeletal
  /// level, checked on complete assignments).
  std::vector<std::vector<int>> fixed;
  /// Optional extra domain filter (level, source simplex, candidate).
  std::function<bool(int, int, int)> allow;
  /// Node budget; 0 means the global budget.
  std::size_t max_nodes = 0;
};

/// Backtracking solver over the nondegenerate simplices of the source, in a
/// static order that assigns a simplex as soon as all of its faces are known.
class MapSearch {
 public:
  using Levels = std::vector<std::vector<int>>;
  using Visitor = std::function<bool(const Levels&)>;

  explicit MapSearch(MapSearchSpec spec);

  /// Levels 0..top_dim() of every solution, in a deterministic order.
  /// Returning false stops. Returns the number of solutions visited.
  std::size_t enumerate(const Visitor& visit) const;
  std::optional<SimplicialMap> first() const;
  /// Throws BudgetExceeded above `limit`.
  std::size_t count(std::size_t limit) const;
  SimplicialMap to_map(const Levels& levels) const;
  int top_dim() const { return top_; }
  const MapSearchSpec& spec() const { return spec_; }

 private:
  struct Var {
    int dim;
    int simplex;
    // faces as (var index, EZ dimension, surjection); var -1 never happens
    std::vector<std::tuple<int, int, SimplexOp>> faces;
    int fixed = -1;
    // degenerate source simplices with a prescribed value whose
    // nondegenerate part is this variable
    std::vector<std::pair<SimplexOp, int>> degenerate_fixed;
  };
  MapSearchSpec spec_;
  int top_ = 0;
  std::vector<Var> vars_;
  std::vector<int> order_;
  std::vector<std::vector<int>> var_of_;                   // [k][x] or -1
  std::vector<std::vector<TauSSet::EZ>> ez_;               // [k][x]
  std::vector<std::tuple<int, int, int>> high_fixed_;      // (k, x, value), k > top_
  Levels expand(const std::vector<int>& val) const;
  bool check_high(const Levels& lv) const;
};

/// All simplicial maps source -> target (levels 0..n_target each).
std::vector<SimplicialMap> all_maps(const TauSSet& source, const TauSSet& target, std::size_t limit);

/// Extends map levels 0..top to 0..k by boundary lookup in the target.
/// Returns false when some boundary has no filler.
bool extend_levels(const TauSSet& source, const TauSSet& target, std::vector<std::vector<int>>& lv, int k);

/// Some isomorphism a -> b (searches maps and tests bijectivity).
std::optional<SimplicialMap> find_isomorphism(const TauSSet& a, const TauSSet& b, std::size_t max_nodes = 0);

}  // namespace procat
