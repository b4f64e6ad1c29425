#pragma once

#include <vector>

#include "procat/group.hpp"
#include "procat/sset.hpp"

namespace procat {

/// Simplicial group: a TauSSet whose stored levels carry group structures
/// (element code = simplex id) with homomorphic faces and degeneracies.
struct SimplicialGroup {
  TauSSet sset;
  std::vector<FinGroup> groups;  // levels 0..groups.size()-1
  int top() const { return static_cast<int>(groups.size()) - 1; }
  /// Checks that every structure map between stored group levels is a
  /// homomorphism (tested on all elements against block generators).
  void check() const;
};

/// Nerve of the one-object groupoid: (BG)_k = G^k, tuple (g_1..g_k) coded
/// as sum g_i |G|^(i-1). 2-coskeletal; levels 0..stored kept explicitly.
TauSSet b_group(const FinGroup& g, int stored = 3);
/// B A as a simplicial abelian group (levels A^k).
SimplicialGroup b_group_abelian(const FinGroup& a, int stored);
/// cosk_0 of the underlying set of G: (EG)_k = G^(k+1).
TauSSet e_group(const FinGroup& g);
/// Vertex sequence (g_0..g_k) of a simplex of EG.
std::vector<int> eg_vertices(const TauSSet& eg, int k, int x);
/// EG -> BG, (g_0..g_k) -> (g_0^-1 g_1, ..., g_{k-1}^-1 g_k).
SimplicialMap eg_to_bg(const FinGroup& g, const TauSSet& eg, const TauSSet& bg);
/// Checks that left multiplication makes EG -> BG a principal G-covering on
/// levels 0..top: the action is free and the fibers are exactly the orbits.
bool is_principal_covering(const FinGroup& g, const SimplicialMap& p, int top);

/// Bounded chain complex of finite abelian groups with differentials given as
/// code tables: diff[k][c] = ∂(c) for c in C_k (k >= 1).
struct FinChainComplex {
  std::vector<FinAbGroup> groups;
  std::vector<std::vector<long long>> diff;
  int top() const { return static_cast<int>(groups.size()) - 1; }
  static FinChainComplex concentrated(const FinAbGroup& a, int n);
  void check() const;
};

/// Surjections [m] ->> [k] as nondecreasing value sequences, in lex order.
std::vector<SimplexOp> surjections(int m, int k);

/// Γ(C) with levels 0..level_bound explicit: Γ(C)_m = ⊕_{σ:[m]->>[k]} C_k,
/// blocks ordered by k then lexicographically. `cosk_level` is the declared
/// coskeletal level (validated on the stored levels above it).
SimplicialGroup dold_kan_gamma(const FinChainComplex& c, int level_bound, int cosk_level);
/// Normalized complex N(G)_k = ∩_{i>=1} ker d_i with ∂ = d_0, as subgroup
/// element lists.
struct NormalizedPiece {
  std::vector<int> elements;
  FinAbGroup type;
};
std::vector<NormalizedPiece> normalized_complex(const SimplicialGroup& g, int top);

/// K(A, n): n = 1 through b_group (stored levels 0..max(stored,3)), n >= 2 as
/// Γ(A[n]) with cosk_level n+1 and levels 0..max(stored, n+2).
SimplicialGroup k_abelian(const FinAbGroup& a, int n, int stored = 0);

/// W̄G and WG from the product formulas, with the projection WG -> W̄G.
struct WConstruction {
  TauSSet wbar;
  TauSSet w;
  SimplicialMap projection;
  std::vector<std::vector<std::vector<int>>> wbar_tuples;  // [k][code] -> (g_{k-1}, ..., g_0)
  std::vector<std::vector<std::vector<int>>> w_tuples;     // [k][code] -> (g_k, ..., g_0)
};
/// Levels are stored through `stored` (needs G through `stored`); the
/// declared coskeletal level of both is `cosk_level`.
WConstruction w_constructions(const SimplicialGroup& g, int cosk_level, int stored);

/// Group action on a simplicial set given on levels 0..act.size()-1
/// (act[k][g * |X_k| + x]); higher levels follow from boundaries.
struct GAction {
  FinGroup group;
  TauSSet space;
  std::vector<std::vector<int>> act;
  int apply(int k, int g, int x) const;
  /// Simplicial and an action on every given level.
  void check() const;
  /// Extends the tables through level k.
  void extend_to(int k);
  static GAction trivial(const FinGroup& g, const TauSSet& x, int top);
};
/// Action of a G-module on K(A, n) = Γ(A[n]) applied blockwise.
GAction module_action_on_k(const GModule& m, const SimplicialGroup& k_an);

/// (EG × X)/G in Borel normal form: level k is G^k × X_k, simplex
/// ((h_1..h_k), x) coded as x * |G|^k + tuple code.
TauSSet homotopy_quotient(GAction action, int cosk_level, int stored);

}  // namespace procat
