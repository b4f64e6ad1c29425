#pragma once

#include <optional>
#include <string>
#include <vector>

#include "procat/eilmac.hpp"
#include "procat/homotopy.hpp"

namespace procat {

enum class KNilKind { Leaf, Point, Pullback, Iso, WeakEquivalence, Retract };
enum class WeMethod { MinimalIso, HomotopyGroups };

/// One node of a K_nil certificate. `object` is the space the node
/// certifies; which of the optional maps are needed depends on `kind`.
struct KNilNode {
  std::string id;
  KNilKind kind = KNilKind::Leaf;
  TauSSet object;
  std::vector<int> children;

  // Leaf: basis label and optional isomorphism object -> basis element.
  std::string label;
  std::optional<SimplicialMap> iso;

  // Pullback with children {X, Y, Z}: legs X -> Z, Y -> Z, projections
  // object -> X, object -> Y. marked = 0 (X -> Z) or 1 (Y -> Z).
  std::optional<SimplicialMap> leg_x, leg_y, pr_x, pr_y;
  int marked = 1;

  // Iso: `iso` is object -> child. Retract: section object -> child and
  // retraction child -> object.
  std::optional<SimplicialMap> section, retraction;

  // Weak equivalence with the single child.
  WeMethod we_method = WeMethod::MinimalIso;
  int we_bound = 3;
};

struct KNilCertificate {
  std::vector<KNilNode> nodes;
  int root = 0;
  int index_of(const std::string& id) const;
};

/// Basis: "Kpi", "Kp:<prime>", or an explicit list of named objects.
struct KNilBasis {
  std::string name = "Kpi";
  int prime = 0;
  std::vector<std::pair<std::string, TauSSet>> custom;
  static KNilBasis kpi() { return {"Kpi", 0, {}}; }
  static KNilBasis kp(int p);
  static KNilBasis parse(const std::string& s);
  /// Whether the label names a member of this basis.
  bool admits(const std::string& label) const;
  /// The object named by the label (custom entries by name). Labels:
  /// "point", "K(S,0):<k>", "B(<G>)", "K(<A>,<n>)", "L(<A>,<n>)" and, for
  /// Kpi, "K(<A>,<n>)_h<G>" with G = Z/2 acting by inversion. G is Z/k or
  /// S3; A is Z/k.
  TauSSet element(const std::string& label) const;
};

struct KNilVerdict {
  bool accepted = false;
  bool retract_only = false;
  std::string failing_node;
  std::string condition;
  std::vector<std::string> log;  // one line per node, in node order
};

/// Validates the tree shape and every node's local condition. Nodes are
/// checked in parallel; the reported failure is the first in node order.
KNilVerdict knil_check(const KNilCertificate& cert, const KNilBasis& basis, Exec exec = Exec::Parallel);

/// Equal level data (counts, faces, degeneracies) through max cosk + 1.
bool same_structure(const TauSSet& a, const TauSSet& b);

/// L(A,n+1)_{hG} -> K(A,n+1)_{hG} built as W K(A,n) -> W̄ K(A,n), with the
/// homotopy quotient by the module action when G is nontrivial.
struct LToK {
  TauSSet l, k;
  SimplicialMap projection;
};
LToK l_to_k_fibration(const GModule& m, int n);

struct ClassifyingCandidate {
  SimplicialMap map;
  bool pullback_matches = false;  // pullback isomorphic to the expected object
  std::vector<FinAbGroup> pi1_pullback;  // abelian type of π_1 when abelian
  int pi1_order = 0;
};
/// All maps base -> p.target(), each tested for base ×_Z E ≅ expected.
std::vector<ClassifyingCandidate> classifying_map_search(const TauSSet& base, const SimplicialMap& p,
                                                          const TauSSet& expected, std::size_t limit = 10'000);

struct StageVerdict {
  bool ok = false;
  std::string condition;
  int pi1_order_pullback = 0;
  std::string pi1_pullback;
};
/// Square X -> L(A,n+1)_{hG}, X_prev -> K(A,n+1)_{hG} with the given
/// classifying map X_prev -> K(A,n+1)_{hG}: the right leg is a Kan
/// fibration and X is isomorphic to the strict pullback. For n = 1 and a
/// point X_prev with trivial A the stage is X ≅ B(G).
StageVerdict postnikov_stage_verify(const TauSSet& x, const TauSSet& x_prev, const GModule& m, int n,
                                    const std::optional<SimplicialMap>& classifying_map);

/// π_1 of a Kan complex at vertex 0 via its minimal model.
HomotopyGroup pi1_via_minimal(const TauSSet& x);

}  // namespace procat
