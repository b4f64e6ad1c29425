#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "procat/common.hpp"
#include "procat/sset.hpp"

namespace procat {

/// Visitor for compatible families. `first` is the candidate chosen for the
/// first enumerated slot; returning false stops the subtree of that
/// candidate. Must be thread safe for Exec::Parallel.
using FamilyVisitor = std::function<bool(int first, const std::vector<int>& family)>;

/// Enumerates tuples (y_0, ..., y_k) of (k-1)-simplices with
/// d_i y_j = d_{j-1} y_i for i < j. When skip >= 0 the slot `skip` is left
/// free (entry -1), giving the horns Λ^k_skip. Serial and parallel paths
/// visit candidates of the first slot in the same order within each
/// candidate.
void for_each_family(const TauSSet& x, int k, int skip, Exec exec, const FamilyVisitor& visit);

/// Materialized families (flattened, k+1 entries each) in canonical order.
/// Throws BudgetExceeded past `limit` families.
std::vector<int> compatible_families(const TauSSet& x, int k, int skip, Exec exec, std::size_t limit);

struct HornFailure {
  int k = 0;
  int i = 0;
  std::vector<int> horn;  // k+1 entries, entry i = -1
};

/// First horn Λ^k_i in X without a filler, in canonical order.
std::optional<HornFailure> find_unfillable_horn(const TauSSet& x, int k, int i, Exec exec);

struct LiftFailure {
  int k = 0;
  int i = -1;  // horn index, or -1 for a boundary lifting problem
  std::vector<int> source_faces;
  int target_simplex = -1;
};

/// Horn Λ^k_i in E with a filler b in B of its image that has no lift.
std::optional<LiftFailure> find_unliftable_horn(const SimplicialMap& p, int k, int i, Exec exec);
/// Boundary ∂Δ^k in E with a filler in B of its image that has no lift
/// (k = 0: a vertex of B outside the image).
std::optional<LiftFailure> find_unliftable_boundary(const SimplicialMap& p, int k, Exec exec);

}  // namespace procat
