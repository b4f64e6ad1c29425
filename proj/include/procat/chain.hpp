#pragma once

#include <vector>

#include "procat/abgroup.hpp"
#include "procat/sset.hpp"

namespace procat {

/// Bounded chain complex of finitely generated free abelian groups.
/// boundary[k] : C_k -> C_{k-1} is ranks[k-1] x ranks[k]; boundary[0] is 0 x ranks[0].
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<IntMat> boundary;
  int top() const { return static_cast<int>(ranks.size()) - 1; }
  /// Throws InvariantViolation if some ∂∘∂ is nonzero.
  void check() const;
};

/// Normalized chains of X in degrees 0..top; the basis of C_k is
/// X.nondegenerate(k) in increasing order.
ChainComplex normalized_chains(const TauSSet& x, int top);

/// Chain complex with a single group A = Z^r + ⊕ Z/d at degree n, modelled
/// as the 2-term free resolution placed in degrees n and n+1.
ChainComplex shifted_group(const FinAbGroup& a, int n);

/// H_0..H_bound with coefficients Z (modulus 0) or Z/m.
std::vector<FinAbGroup> homology(const TauSSet& x, int bound, long long modulus = 0);
std::vector<FinAbGroup> homology(const ChainComplex& c, int bound, long long modulus = 0);
/// H^0..H^bound with coefficients Z (modulus 0) or Z/m.
std::vector<FinAbGroup> cohomology(const TauSSet& x, int bound, long long modulus);

/// Homology/cohomology in one degree with generators, for induced maps.
struct GradedPiece {
  int degree = 0;
  bool cohomological = false;
  std::vector<int> basis;  // nondegenerate simplex ids of X_degree
  Subquotient q;
};
GradedPiece homology_piece(const TauSSet& x, int k, long long modulus);
GradedPiece cohomology_piece(const TauSSet& x, int k, long long modulus);

/// Matrix of f_* : H_k(X) -> H_k(Y) in generator coordinates
/// (rows: target generators, columns: source generators).
IntMat induced_on_homology(const SimplicialMap& f, const GradedPiece& src, const GradedPiece& dst);
/// Matrix of f^* : H^k(Y) -> H^k(X) (rows: generators of H^k(X), columns: of H^k(Y)).
IntMat induced_on_cohomology(const SimplicialMap& f, const GradedPiece& src_x, const GradedPiece& dst_y);

/// Universal coefficient prediction of H^k(X; Z/m) from H_k and H_{k-1}.
FinAbGroup uct_cohomology(const FinAbGroup& hk, const FinAbGroup& hk_minus_1, long long m);
/// Universal coefficient prediction of H_k(X; Z/m).
FinAbGroup uct_homology(const FinAbGroup& hk, const FinAbGroup& hk_minus_1, long long m);

/// Cokernel of a map between presented groups: target Z^t / diag(target_orders)
/// modulo the columns of `m` (t x s).
FinAbGroup cokernel(const std::vector<long long>& target_orders, const IntMat& m);

}  // namespace procat
