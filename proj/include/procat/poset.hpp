#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "procat/fincat.hpp"

namespace procat {

using Elem = long long;

/// Effective cofinite cofiltered poset. Elements are 0, 1, 2, ... in an
/// enumeration that is a linear extension (s < t implies s is listed first),
/// so every prefix is downward closed. Arrows run u -> v for u >= v.
struct EffPoset {
  std::string name;
  std::optional<Elem> size;  // nullopt: infinite
  std::function<std::string(Elem)> label;
  std::function<bool(Elem, Elem)> leq;
  std::function<Elem(Elem, Elem)> join;  // an upper bound of both
  std::function<std::vector<Elem>(Elem)> downset;  // {s | s < t}

  /// The first min(depth, size) elements.
  std::vector<Elem> fragment(Elem depth) const;
  /// Checks order axioms, join bounds, downset exactness and the
  /// linear-extension property on the fragment.
  void validate(Elem depth) const;
  FinPoset to_finite(Elem depth) const;

  /// Element e is the positive integer e + 1 ordered by divisibility.
  static EffPoset divisibility();
  static EffPoset chain(int k);
  /// 0 < 1 < 2 < ... (infinite).
  static EffPoset omega();
  /// Componentwise order, enumerated by diagonals (a + b constant), which
  /// keeps prefixes downward closed.
  static EffPoset product(const EffPoset& a, const EffPoset& b);
  /// A finite cofiltered poset (needs binary upper bounds).
  static EffPoset finite(const FinPoset& p);
  /// Builder names: "divisibility", "omega", "chain:<k>", "product:<a>,<b>"
  /// (no nesting).
  static EffPoset by_name(const std::string& spec);
};

/// Monotone map between effective posets given on elements.
struct PosetMap {
  EffPoset source, target;
  std::function<Elem(Elem)> map;
  /// n -> n! from omega into divisibility.
  static PosetMap factorials();
  static PosetMap identity(const EffPoset& p);
  static PosetMap constant(const EffPoset& s, const EffPoset& t, Elem value);
};

}  // namespace procat
