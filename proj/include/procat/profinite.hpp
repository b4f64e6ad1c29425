#pragma once

#include <optional>
#include <string>
#include <vector>

#include "procat/chain.hpp"
#include "procat/proeng.hpp"

namespace procat {

/// The same tower with hom sets taken up to homotopy.
ProObject<KanHoBase> up_to_homotopy(const ProObject<KanBase>& x);

/// Nerve of the category with objects 0, 1 and arrows α, β : 0 -> 1 (a
/// model of the circle).
TauSSet nerve_parallel_pair();
/// N B(Z/n) -> N B(Z/m) induced by 1 ↦ 1 (m | n).
SimplicialMap cyclic_quotient_map(const TauSSet& bn, const TauSSet& bm, int n, int m);
/// {N B(Z/n)} over divisibility, quotient transitions (memoized).
ProObject<KanBase> classifying_tower();
/// {Z/n} over divisibility, quotient transitions.
ProObject<FinAbBase> cyclic_group_tower();

/// A tower with a map from a simple object, in representative form.
struct CompletionTower {
  TauSSet source;
  ProObject<KanBase> tower;
  RepProMap<KanBase> map;  // from the constant pro-object on `source`
  /// Validates every component map and its compatibility at depth.
  void verify(Elem depth) const;
};
/// F : N I -> {N B(Z/n)} with f_n(α) = 1, f_n(β) = 0.
CompletionTower circle_completion();

/// Levelwise H_k (coefficients Z/modulus, Z when 0) with induced maps.
struct HomologyTower {
  ProObject<FinAbBase> groups;
  std::function<GradedPiece(Elem)> piece;
};
HomologyTower homology_tower(const ProObject<KanBase>& x, int k, long long modulus = 0);
/// Levelwise H_1 with induced transitions, validated on the fragment.
ProObject<FinAbBase> pro_h1(const ProObject<KanBase>& x, Elem depth);
/// H_1 of a representative-form map.
RepProMap<FinAbBase> pro_h1_map(const RepProMap<KanBase>& f, const HomologyTower& hx, const HomologyTower& hy);

struct AbIsoVerdict {
  bool iso = false;
  Elem depth = 0;
  std::size_t candidates = 0;
  std::string obstruction;                  // when not iso
  std::optional<RepProMap<FinAbBase>> inverse;
};
/// Searches the hom classes Y -> X at depth for a two-sided inverse (or
/// verifies the supplied candidate).
AbIsoVerdict pro_ab_iso_check(const RepProMap<FinAbBase>& f, Elem depth,
                              const std::optional<RepProMap<FinAbBase>>& candidate = std::nullopt);

/// colim_i H^k(X_i; Z/p) over the first `depth` elements, classes merged
/// at joins as in pro_hom_to_simple.
struct ProCohomology {
  int degree = 0;
  long long prime = 0;
  Elem depth = 0;
  FinAbGroup group;
  std::vector<std::pair<Elem, long long>> reps;  // (element, code in H^k(X_i))
  Elem stable_since = 0;
  bool stable() const { return stable_since < depth; }
  std::string stability() const;
};
ProCohomology pro_cohomology(const ProObject<KanBase>& x, long long p, int k, Elem depth);

struct MorelDegree {
  int degree = 0;
  FinAbGroup source, target;
  bool bijective = false;
};
struct MorelVerdict {
  bool equivalent = false;
  long long prime = 0;
  std::vector<MorelDegree> degrees;
};
/// f^* : colim H^k(Y; Z/p) -> colim H^k(X; Z/p) bijective for k <= k_bound.
MorelVerdict morel_equiv_check(const RepProMap<KanBase>& f, long long p, int k_bound, Elem depth);

/// colim_i π_0 Map(X_i, Y) along precomposition with the transitions,
/// classes merged as in pro_hom_to_simple. A second route to [X, Y] that
/// does not go through the homotopy-category hom sets.
struct Pi0Colimit {
  Elem depth = 0;
  std::vector<std::pair<Elem, int>> reps;  // (element, vertex of Map(X_i, Y))
  std::size_t count() const { return reps.size(); }
};
Pi0Colimit colim_pi0_mapping(const ProObject<KanBase>& x, const TauSSet& y, Elem depth);

/// Partial Quick invariants: levelwise π_0, H^k with the listed constant
/// coefficients, and levelwise H_1. Twisted coefficients are not covered.
struct QuickReport {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string scope = "partial: pi0, H1 and constant finite coefficients only";
};
QuickReport quick_invariants(const ProObject<KanBase>& x, Elem depth, const std::vector<long long>& coefficients,
                             int k_bound = 1);

}  // namespace procat
