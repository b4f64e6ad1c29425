#pragma once

#include <string>
#include <vector>

#include "procat/fincat.hpp"

namespace procat {

/// Morphism classes of a finite category as membership flags.
using MorphismClass = std::vector<char>;

MorphismClass class_from_names(const FinCategory& c, const std::vector<std::string>& names);
MorphismClass isomorphisms(const FinCategory& c);
MorphismClass all_morphisms(const FinCategory& c);

/// Axioms in checking order: 0 both classes are subcategories containing
/// every isomorphism, 1 finite limits (terminal object, binary products,
/// equalizers), 2 two-out-of-three for W, 3 Fib and Fib ∩ W stable under
/// base change along every pullback square, 4 every map is Fib ∘ W.
struct WfcVerdict {
  bool ok = true;
  int axiom = -1;
  std::string axiom_name;
  std::string message;
  std::vector<std::string> witnesses;  // object or morphism names
};
std::string wfc_axiom_name(int axiom);

WfcVerdict wfc_check(const FinCategory& c, const MorphismClass& w, const MorphismClass& fib);

/// Limit helpers, each checked against every test cone.
bool is_terminal(const FinCategory& c, int t);
/// (apex, leg to a, leg to b) is a product of a and b.
bool is_product(const FinCategory& c, int pa, int pb);
/// e : E -> a equalizes f, g : a -> b universally.
bool is_equalizer(const FinCategory& c, int e, int f, int g);
/// p ∘ q1 = g ∘ q2 is a pullback square.
bool is_pullback(const FinCategory& c, int p, int g, int q1, int q2);

}  // namespace procat
