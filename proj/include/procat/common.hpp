#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace procat {

/// Raised when an enumeration would exceed the configured resource limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when input data violates a structural invariant (simplicial
/// identities, functoriality, group axioms, ...). The message names the
/// violated identity.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Budget {
  std::size_t max_simplices_per_level = 4'000'000;
  std::size_t max_search_nodes = 50'000'000;
  std::size_t max_solutions = 5'000'000;
};

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path kept for testing; Parallel uses OpenMP.
enum class Exec { Serial, Parallel };

struct TupleHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Tuples as mixed-radix codes, first entry least significant.
inline std::vector<int> decode_uniform(long long code, int base, int len) {
  std::vector<int> t(len);
  for (int i = 0; i < len; ++i) {
    t[i] = static_cast<int>(code % base);
    code /= base;
  }
  return t;
}

inline long long encode_uniform(const std::vector<int>& t, int base) {
  long long c = 0;
  for (std::size_t i = t.size(); i-- > 0;) c = c * base + t[i];
  return c;
}

inline std::vector<int> decode_radix(long long code, const std::vector<int>& radix) {
  std::vector<int> t(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    t[i] = static_cast<int>(code % radix[i]);
    code /= radix[i];
  }
  return t;
}

inline long long encode_radix(const std::vector<int>& t, const std::vector<int>& radix) {
  long long c = 0;
  for (std::size_t i = radix.size(); i-- > 0;) c = c * radix[i] + t[i];
  return c;
}

/// Union-find over dense integer ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }
  std::size_t size() const { return parent_.size(); }
  int count_roots() {
    int c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace procat
