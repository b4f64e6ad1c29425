#pragma once

#include <optional>
#include <string>
#include <vector>

#include "procat/fincat.hpp"
#include "procat/knil.hpp"
#include "procat/wfc.hpp"

namespace procat {

struct NamedSSet {
  std::string name;
  TauSSet sset;
};
/// Twenty small coskeletal objects (points, simplices, classifying spaces,
/// nerves, Eilenberg–MacLane spaces, a product).
std::vector<NamedSSet> coskeletal_examples();

/// A functor and, for the Thomason examples, a covariant H on its target.
struct CofinalityExample {
  std::string name;
  FinFunctor functor;
  std::optional<SetFunctor> h;
};
/// Functors out of cofiltered categories, coinitial by the classical test.
std::vector<CofinalityExample> quillen_a_examples();
/// Functors into categories with a set-valued H, cofinal by the classical
/// test.
std::vector<CofinalityExample> thomason_examples();

struct HomologyRow {
  int degree = 0;
  FinAbGroup lhs, rhs;
  bool equal = false;
};
struct HomologyComparison {
  std::string name;
  std::string certificate;  // the cofinality label
  bool certified = false;
  std::vector<HomologyRow> rows;
  bool agree() const;
};
/// H_k(N I) against H_k(N J), k <= max_degree.
HomologyComparison quillen_a_compare(const CofinalityExample& e, int max_degree = 2);
/// H_k(N ∫(H∘f)) against H_k(N ∫H), k <= max_degree.
HomologyComparison thomason_compare(const CofinalityExample& e, int max_degree = 2);

/// K(Z/4,1) as the pullback of L(Z/2,2) -> K(Z/2,2) along a classifying map
/// found by search, plus the two negatives.
struct PostnikovZ4 {
  SimplicialMap classifying, zero_map;
  KNilCertificate certificate;
  /// Marked leg swapped to the non-fibration leg.
  KNilCertificate corrupted;
  /// Pullback along the zero map, offered as weakly equivalent to B(Z/4).
  KNilCertificate zero;
  StageVerdict stage, zero_stage;
};
PostnikovZ4 postnikov_z4();

struct WfcFixture {
  std::string name;
  FinCategory category;
  MorphismClass w, fib;
  int expected_axiom = -1;  // -1: passes
};
/// The positive lattice fixture and one negative per axiom.
std::vector<WfcFixture> wfc_fixtures();

}  // namespace procat
