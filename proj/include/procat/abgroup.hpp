#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "procat/common.hpp"

namespace procat {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

using IntMat = Mat<long long>;

IntMat transpose(const IntMat& m);
IntMat multiply(const IntMat& x, const IntMat& y);

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<long long> invariant_factors, int free_rank = 0);

  /// Normalizes an arbitrary list of cyclic orders (entries <= 1 are dropped,
  /// 0 means a free summand) into invariant-factor form.
  static FinAbGroup from_cyclic_orders(const std::vector<long long>& orders);
  static FinAbGroup cyclic(long long n) { return from_cyclic_orders({n}); }
  static FinAbGroup free(int rank) { return FinAbGroup({}, rank); }

  const std::vector<long long>& invariant_factors() const { return factors_; }
  int free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  long long order() const;  // finite part order; throws if infinite
  std::string to_string() const;

  // Elements of a finite group, as mixed-radix codes over the invariant factors.
  long long encode(const std::vector<long long>& coords) const;
  std::vector<long long> decode(long long code) const;
  long long add(long long x, long long y) const;
  long long neg(long long x) const;
  long long element_order(long long x) const;

  bool operator==(const FinAbGroup& o) const = default;

 private:
  std::vector<long long> factors_;
  int free_rank_ = 0;
};

/// Smith normal form U*A*V = D with D diagonal and diag(D) a divisibility chain.
struct Snf {
  std::vector<BigInt> diag;  // first `rank` entries, all positive
  int rank = 0;
  Mat<BigInt> U, Uinv, V, Vinv;  // filled only when transforms were requested
};

Snf smith_normal_form(const IntMat& a, bool transforms);

/// ker(out) / im(in) for integer matrices acting on a free module of rank
/// `dim`, computed over Z (modulus 0) or over Z/modulus. `out` is rows x dim,
/// `in` is dim x cols. Keeps explicit generators and a coordinate map.
class Subquotient {
 public:
  Subquotient() = default;
  static Subquotient compute(const IntMat& out, const IntMat& in, int dim, long long modulus);

  const FinAbGroup& group() const { return group_; }
  long long modulus() const { return modulus_; }
  int dim() const { return dim_; }
  int num_generators() const { return static_cast<int>(gen_orders_.size()); }
  /// Order of generator j (0 for a free generator).
  long long generator_order(int j) const { return gen_orders_[j]; }
  /// Ambient representative of generator j (reduced mod modulus if nonzero).
  const std::vector<BigInt>& generator(int j) const { return generators_[j]; }
  /// Coordinates of a cycle in terms of the generators, reduced modulo the
  /// generator orders. Throws if the vector is not a cycle.
  std::vector<BigInt> coordinates(const std::vector<long long>& cycle) const;
  std::vector<BigInt> coordinates(const std::vector<BigInt>& cycle) const;

 private:
  FinAbGroup group_;
  long long modulus_ = 0;
  int dim_ = 0;
  int rank_out_ = 0;
  // kernel generators in y = Vinv x coordinates: index, scale, order
  std::vector<int> kidx_;
  std::vector<long long> kscale_;
  std::vector<long long> korder_;
  Mat<BigInt> vinv_rows_;  // rows of Vinv at kidx_
  Mat<BigInt> uprime_;     // kept rows of U' (num_generators x kidx_.size())
  std::vector<long long> gen_orders_;
  std::vector<std::vector<BigInt>> generators_;
  IntMat out_;
};

long long to_ll(const BigInt& x);
long long big_mod(const BigInt& x, long long m);

}  // namespace procat
