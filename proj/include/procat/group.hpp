#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "procat/abgroup.hpp"

namespace procat {

/// Finite group on elements 0..order-1 with identity 0. Backed either by an
/// explicit multiplication table or by a finite abelian group (mixed-radix
/// element codes), so large abelian levels never need a table.
class FinGroup {
 public:
  FinGroup() = default;
  /// Validates the group axioms exhaustively.
  static FinGroup from_table(std::vector<int> table, int order, std::string name = {});
  static FinGroup from_abelian(const FinAbGroup& a, std::string name = {});
  /// Product of abelian blocks; element code = sum of block codes in mixed
  /// radix, block 0 least significant.
  static FinGroup abelian_blocks(std::vector<FinAbGroup> blocks, std::string name = {});
  static FinGroup cyclic(int n);
  static FinGroup trivial() { return cyclic(1); }
  static FinGroup symmetric3();
  static FinGroup direct_product(const FinGroup& g, const FinGroup& h);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }
  /// The isomorphism type when abelian-backed.
  const std::optional<FinAbGroup>& abelian_structure() const { return ab_; }
  /// Block decomposition of abelian-backed groups (empty for table-backed).
  const std::vector<FinAbGroup>& blocks() const { return blocks_; }
  int element_order(int a) const;
  /// Checks associativity, identity and inverses (throws InvariantViolation).
  void check_axioms() const;

 private:
  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  bool abelian_ = true;
  std::optional<FinAbGroup> ab_;
  std::vector<FinAbGroup> blocks_;
  std::vector<long long> block_size_;
  std::string name_ = "1";
};

bool is_homomorphism(const FinGroup& g, const FinGroup& h, const std::vector<int>& f);
/// All homomorphisms g -> h (brute force over generator images).
std::vector<std::vector<int>> all_homomorphisms(const FinGroup& g, const FinGroup& h, std::size_t limit);
/// Generators of g found greedily (each new one outside the span so far).
std::vector<int> generators(const FinGroup& g);
/// Isomorphism type of an abelian FinGroup.
FinAbGroup abelian_type(const FinGroup& g);
/// Isomorphism type of a finite abelian group from the list of all of its
/// element orders.
FinAbGroup abelian_type_from_orders(const std::vector<int>& orders);

/// Finite G-module: abelian group A (elements as codes) with action table
/// act[g * |A| + a].
struct GModule {
  FinGroup group;
  FinAbGroup module;
  std::vector<int> act;
  int apply(int g, int a) const { return act[static_cast<std::size_t>(g) * module.order() + a]; }
  /// Each g acts by an automorphism; e acts trivially; (gh)a = g(ha).
  void check() const;
  static GModule trivial(const FinGroup& g, const FinAbGroup& a);
  /// G = Z/2 acting on A by negation.
  static GModule inversion(const FinAbGroup& a);
};

}  // namespace procat
