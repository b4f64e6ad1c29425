#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "procat/group.hpp"
#include "procat/kernels.hpp"
#include "procat/sset.hpp"

namespace procat {

struct KanVerdict {
  bool kan = true;
  int checked_up_to = 0;          // horns Λ^m_i checked for 1 <= m <= this
  std::optional<HornFailure> failure;
};
/// Horn filling in dimensions 1..n+1. For an n-coskeletal complex higher
/// horns contain the whole n-skeleton of the simplex and fill uniquely.
KanVerdict is_kan(const TauSSet& x, Exec exec = Exec::Parallel);

struct FibrationVerdict {
  bool ok = true;
  int checked_up_to = 0;
  std::optional<LiftFailure> failure;
};
/// Right lifting against horns in dimensions 1..max(n_E, n_B)+1.
FibrationVerdict is_kan_fibration(const SimplicialMap& p, Exec exec = Exec::Parallel);
/// Right lifting against ∂Δ^k ⊂ Δ^k for 0 <= k <= max(n_E, n_B)+1.
FibrationVerdict is_trivial_fibration(const SimplicialMap& p, Exec exec = Exec::Parallel);

enum class RelHomotopy { Prism, Simplex };

/// Homotopy rel boundary between m-simplices with equal boundary. Prism:
/// search for Δ^m × Δ¹ -> X with the ends x, y and sides degenerate on ∂x.
/// Simplex: an (m+1)-simplex z with d_m z = x, d_{m+1} z = y and
/// d_i z = s_{m-1} d_i x for i < m (m = 0: an edge from y to x).
bool homotopic_rel_boundary(const TauSSet& x, int m, int a, int b, RelHomotopy method = RelHomotopy::Prism);

struct MinimalVerdict {
  bool minimal = true;
  int dim = -1;  // witness pair when not minimal
  int first = -1, second = -1;
};
/// Requires a Kan complex. Checks dimensions 0..n+1.
MinimalVerdict is_minimal(const TauSSet& x, RelHomotopy method = RelHomotopy::Prism);

struct MinimalModel {
  SubObject sub;             // M ⊂ X
  SimplicialMap retraction;  // X -> M with r ∘ i = id
};
/// Minimal subcomplex built degreewise (one representative per rel-boundary
/// class, degenerate representatives preferred) and a retraction found by
/// map search.
MinimalModel minimalize(const TauSSet& x, RelHomotopy method = RelHomotopy::Simplex);

/// Number of path components (union-find over edges).
int pi0(const TauSSet& x);
std::vector<int> component_of_vertices(const TauSSet& x);

struct HomotopyGroup {
  int k = 1;
  std::vector<int> elements;  // k-simplices; identity first
  FinGroup group;             // on indices into `elements`
  std::optional<FinAbGroup> abelian;
};
/// π_k(X, v) for minimal Kan X, 1 <= k <= n+1. Product [x][y] = [d_k z]
/// with z filling Λ^{k+1}_k (d_{k-1} z = x, d_{k+1} z = y, other faces at
/// the base point). Throws PreconditionError on non-minimal input unless
/// `assume_minimal`.
HomotopyGroup homotopy_group(const TauSSet& x, int basepoint, int k, bool assume_minimal = false);

/// Truncated mapping space: level m holds the maps X × Δ^m -> Y (each stored
/// by its values on the simplices of X × Δ^m through level n_Y).
struct MappingSpace {
  TauSSet source, target;
  int top = 0;
  std::vector<std::vector<std::vector<int>>> maps;  // [m][index] -> flattened values
  Truncated levels;                                 // faces and degeneracies among 0..top
  std::vector<std::unordered_map<std::vector<int>, int, TupleHash>> lookup;
  /// Index of a flattened map at level m, or -1.
  int index_of(int m, const std::vector<int>& flat) const;
};
MappingSpace mapping_space(const TauSSet& x, const TauSSet& y, int level_bound, std::size_t limit = 1'000'000);
/// π_0 of the mapping space (Y Kan): components of the level-0/level-1 graph.
int pi0_mapping_space(const TauSSet& x, const TauSSet& y);
/// The mapping space as a simplicial set, declared n_Y-coskeletal (a map
/// X × Δ^m -> Y is determined on X × ∂Δ^m once m > n_Y). Needs top >= n_Y.
TauSSet mapping_space_sset(const MappingSpace& ms);

/// f ≃ g : X -> Y (Y Kan): some X × Δ¹ -> Y restricts to f at 0, g at 1.
bool homotopic_maps(const SimplicialMap& f, const SimplicialMap& g);

/// Y^{Δ¹} with the evaluations at the two ends and the constant paths.
struct PathObject {
  TauSSet path;
  SimplicialMap ev0, ev1, constant;
};
PathObject path_object(const TauSSet& y);

}  // namespace procat
