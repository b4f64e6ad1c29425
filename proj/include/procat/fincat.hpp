#pragma once

#include <optional>
#include <string>
#include <vector>

#include "procat/group.hpp"
#include "procat/sset.hpp"

namespace procat {

/// Finite category given extensionally. Objects and morphisms are indices
/// with string names; comp[g * |Mor| + f] = g∘f, or -1 when cod f != dom g.
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> dom, cod;
  std::vector<int> identity;  // per object
  std::vector<int> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int compose(int g, int f) const { return comp[static_cast<std::size_t>(g) * morphisms.size() + f]; }
  std::vector<int> hom(int a, int b) const;
  /// Both throw PreconditionError on unknown names.
  int object_index(const std::string& name) const;
  int morphism_index(const std::string& name) const;
  bool is_identity(int f) const { return identity[dom[f]] == f; }
  /// Throws InvariantViolation naming the first failing axiom.
  void validate() const;
  /// FNV-1a of a canonical serialization.
  std::string content_hash() const;

  static FinCategory terminal();
  static FinCategory discrete(const std::vector<std::string>& names);
  /// One object, morphisms = group elements, g∘f = g·f.
  static FinCategory from_group(const FinGroup& g);
  /// One object with morphisms {1, e}, e∘e = e.
  static FinCategory idempotent();
  /// Two objects, two parallel non-identity arrows α, β : x -> y.
  static FinCategory parallel_pair();
  /// Build from generators' worth of data: objects, non-identity morphisms
  /// (name, dom, cod) and composites of non-identity pairs. Identities are
  /// added as "id_<object>". Missing composites of composable pairs throw.
  static FinCategory build(const std::vector<std::string>& objects,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& composites);
  static FinCategory product(const FinCategory& a, const FinCategory& b);
  static FinCategory opposite(const FinCategory& c);
  /// E◁: E with a new initial object "cone" and one leg to every object.
  static FinCategory left_cone(const FinCategory& e);
};

struct FinFunctor {
  FinCategory source, target;
  std::vector<int> on_objects, on_morphisms;
  /// Exhaustive: dom, cod, identities and every composable pair.
  void validate() const;
  static FinFunctor identity(const FinCategory& c);
  static FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
  /// Full subcategory inclusion on the listed objects.
  static FinFunctor full_inclusion(const FinCategory& c, const std::vector<int>& objs);
  /// First projection a × b -> a.
  static FinFunctor projection(const FinCategory& a, const FinCategory& b);
};

/// Finite poset with leq[a * n + b] = (a <= b). As a category it has a single
/// morphism u -> v whenever u >= v.
struct FinPoset {
  std::vector<std::string> elements;
  std::vector<char> leq;
  int size() const { return static_cast<int>(elements.size()); }
  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * elements.size() + b] != 0; }
  bool lt(int a, int b) const { return a != b && le(a, b); }
  void validate() const;
  /// Reflexive-transitive closure of the given relation pairs (a <= b).
  static FinPoset from_relation(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& le_pairs);
  static FinPoset chain(int k);  // 0 < 1 < ... < k-1
  static FinPoset discrete(int k);
  /// Divisors of n ordered by divisibility.
  static FinPoset divisors(long long n);
  /// {1..n} ordered by divisibility.
  static FinPoset divisibility_upto(int n);
  FinCategory as_category() const;
  /// Index of the morphism u -> v in as_category() (u >= v), or -1.
  int morphism(int u, int v) const;
};

struct CofilteredVerdict {
  bool ok = true;
  int axiom = 0;  // 1 nonempty, 2 common source, 3 equalizer
  std::vector<int> witnesses;  // objects (axiom 2) or morphisms (axiom 3)
  std::string message;
};
CofilteredVerdict check_cofiltered(const FinCategory& c);

struct ConeExtension {
  int apex = -1;           // object of I
  std::vector<int> legs;   // legs[e] : apex -> F(e)
  FinFunctor extended;     // E◁ -> I
};
/// Common sources for every object of E, then equalization of every pair
/// F(g)∘f_e, f_e' in turn. Throws PreconditionError naming the failed
/// axiom when I is not cofiltered enough for the step.
ConeExtension cone_extension(const FinFunctor& f);
bool is_cone(const FinFunctor& f, int apex, const std::vector<int>& legs);

struct CommaCategory {
  FinCategory category;
  std::vector<std::pair<int, int>> objects;  // (c, morphism of D)
  std::vector<int> underlying;               // morphism -> morphism of C
};
/// Objects (c, F(c) -> d); morphisms u : c -> c' with f'∘F(u) = f.
CommaCategory comma_over(const FinFunctor& f, int d);
/// Objects (c, d -> F(c)); morphisms u with F(u)∘f = f'.
CommaCategory comma_under(const FinFunctor& f, int d);

/// Number of connected components (zig-zags of any length).
int connected_components(const FinCategory& c);
/// Nonempty and every object reachable from the first by a zig-zag of at
/// most `depth` arrows (any length when depth <= 0).
bool is_connected(const FinCategory& c, int depth = 0);

struct CommaVerdict {
  int object = -1;
  bool nonempty = false;
  bool connected = false;
};
struct CofinalityVerdict {
  std::vector<CommaVerdict> per_object;
  bool all = false;
  /// True when the domain is cofiltered (coinitial case) or filtered
  /// (cofinal case), so that a uniform yes certifies the property.
  bool certified = false;
  std::string label() const;
};
/// For every j, whether F_{/j} is nonempty and connected.
CofinalityVerdict check_coinitial_classical(const FinFunctor& f, int connectivity_depth = 0);
/// Dual: j_{/F}, the colimit criterion.
CofinalityVerdict check_cofinal_classical(const FinFunctor& f, int connectivity_depth = 0);
/// Filtered = opposite category cofiltered.
CofilteredVerdict check_filtered(const FinCategory& c);

/// Nerve with composable chains x_0 -> ... -> x_k stored through
/// max(dim_bound, 3) and declared 2-coskeletal. Simplex (f_1..f_k):
/// d_0 drops f_1, d_k drops f_k, d_i composes f_{i+1}∘f_i; s_i inserts
/// the identity of x_i.
TauSSet nerve(const FinCategory& c, int dim_bound = 3);
/// The chains of each stored level of nerve(c, dim_bound).
std::vector<std::vector<std::vector<int>>> nerve_chains(const FinCategory& c, int dim_bound);

/// Set-valued functor on a finite category: sets[c] = size of H(c),
/// maps[f][x] = H(f)(x). Contravariant functors act along f backwards.
struct SetFunctor {
  std::vector<int> sets;
  std::vector<std::vector<int>> maps;
  bool contravariant = false;
  void validate(const FinCategory& c) const;
  static SetFunctor constant(const FinCategory& c, int size);
  /// Hom(-, d).
  static SetFunctor representable_contra(const FinCategory& c, int d);
  SetFunctor pull_back(const FinFunctor& f) const;
};
struct Grothendieck {
  FinCategory category;
  std::vector<std::pair<int, int>> objects;  // (c, x)
};
/// Category of elements. Covariant: (g, x) : (c, x) -> (c', H(g)x).
/// Contravariant: u : (c, x) -> (c', x') with H(u)x' = x.
Grothendieck grothendieck_set(const FinCategory& c, const SetFunctor& h);

/// Rejects posets with infinite downsets (impossible here, kept for the
/// effective case) and invalid orders. deg(t) = 1 + max_{s<t} deg(s).
std::vector<int> reedy_degree(const FinPoset& t);

}  // namespace procat
