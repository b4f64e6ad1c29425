#include "procat/abgroup.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace procat {

namespace {

struct Overflow {};

inline long long add_(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long sub_(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long mul_(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long abs_(long long a) {
  if (a == LLONG_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline bool is_zero(long long a) { return a == 0; }

inline BigInt add_(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub_(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul_(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt abs_(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

template <class T>
struct SnfWork {
  Mat<T> A, U, Uinv, V, Vinv;
  bool tf = false;

  void row_sub(int i, int t, const T& q) {  // row_i -= q row_t
    for (int j = 0; j < A.cols; ++j)
      if (!is_zero(A(t, j))) A(i, j) = sub_(A(i, j), mul_(q, A(t, j)));
    if (!tf) return;
    for (int j = 0; j < U.cols; ++j)
      if (!is_zero(U(t, j))) U(i, j) = sub_(U(i, j), mul_(q, U(t, j)));
    for (int r = 0; r < Uinv.rows; ++r)
      if (!is_zero(Uinv(r, i))) Uinv(r, t) = add_(Uinv(r, t), mul_(q, Uinv(r, i)));
  }
  void row_add(int t, int i) {  // row_t += row_i
    for (int j = 0; j < A.cols; ++j)
      if (!is_zero(A(i, j))) A(t, j) = add_(A(t, j), A(i, j));
    if (!tf) return;
    for (int j = 0; j < U.cols; ++j)
      if (!is_zero(U(i, j))) U(t, j) = add_(U(t, j), U(i, j));
    for (int r = 0; r < Uinv.rows; ++r)
      if (!is_zero(Uinv(r, t))) Uinv(r, i) = sub_(Uinv(r, i), Uinv(r, t));
  }
  void row_swap(int i, int t) {
    if (i == t) return;
    for (int j = 0; j < A.cols; ++j) std::swap(A(i, j), A(t, j));
    if (!tf) return;
    for (int j = 0; j < U.cols; ++j) std::swap(U(i, j), U(t, j));
    for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv(r, i), Uinv(r, t));
  }
  void row_neg(int t) {
    for (int j = 0; j < A.cols; ++j) A(t, j) = sub_(T(0), A(t, j));
    if (!tf) return;
    for (int j = 0; j < U.cols; ++j) U(t, j) = sub_(T(0), U(t, j));
    for (int r = 0; r < Uinv.rows; ++r) Uinv(r, t) = sub_(T(0), Uinv(r, t));
  }
  void col_sub(int j, int t, const T& q) {  // col_j -= q col_t
    for (int r = 0; r < A.rows; ++r)
      if (!is_zero(A(r, t))) A(r, j) = sub_(A(r, j), mul_(q, A(r, t)));
    if (!tf) return;
    for (int r = 0; r < V.rows; ++r)
      if (!is_zero(V(r, t))) V(r, j) = sub_(V(r, j), mul_(q, V(r, t)));
    for (int c = 0; c < Vinv.cols; ++c)
      if (!is_zero(Vinv(j, c))) Vinv(t, c) = add_(Vinv(t, c), mul_(q, Vinv(j, c)));
  }
  void col_swap(int j, int t) {
    if (j == t) return;
    for (int r = 0; r < A.rows; ++r) std::swap(A(r, j), A(r, t));
    if (!tf) return;
    for (int r = 0; r < V.rows; ++r) std::swap(V(r, j), V(r, t));
    for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv(j, c), Vinv(t, c));
  }

  // Moves the smallest nonzero entry of the lower-right block to (t,t).
  bool place_min_pivot(int t) {
    int bi = -1, bj = -1;
    T best{};
    for (int i = t; i < A.rows; ++i)
      for (int j = t; j < A.cols; ++j) {
        const T& x = A(i, j);
        if (is_zero(x)) continue;
        T ax = abs_(x);
        if (bi < 0 || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          if (best == T(1)) goto found;
        }
      }
    if (bi < 0) return false;
  found:
    row_swap(bi, t);
    col_swap(bj, t);
    return true;
  }

  void run() {
    int t = 0;
    const int lim = std::min(A.rows, A.cols);
    while (t < lim) {
      if (!place_min_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < A.rows; ++i) {
          if (is_zero(A(i, t))) continue;
          T q = A(i, t) / A(t, t);
          if (!is_zero(q)) row_sub(i, t, q);
          if (!is_zero(A(i, t))) clean = false;
        }
        for (int j = t + 1; j < A.cols; ++j) {
          if (is_zero(A(t, j))) continue;
          T q = A(t, j) / A(t, t);
          if (!is_zero(q)) col_sub(j, t, q);
          if (!is_zero(A(t, j))) clean = false;
        }
        if (!clean) {
          // bring the smallest remainder in row/column t to the pivot
          int bi = t, bj = t;
          T best = abs_(A(t, t));
          for (int i = t + 1; i < A.rows; ++i)
            if (!is_zero(A(i, t)) && abs_(A(i, t)) < best) {
              best = abs_(A(i, t));
              bi = i;
              bj = t;
            }
          for (int j = t + 1; j < A.cols; ++j)
            if (!is_zero(A(t, j)) && abs_(A(t, j)) < best) {
              best = abs_(A(t, j));
              bi = t;
              bj = j;
            }
          row_swap(bi, t);
          col_swap(bj, t);
          continue;
        }
        int bad = -1;
        for (int i = t + 1; i < A.rows && bad < 0; ++i)
          for (int j = t + 1; j < A.cols; ++j)
            if (!is_zero(A(i, j)) && !is_zero(A(i, j) % A(t, t))) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        row_add(t, bad);
      }
      if (A(t, t) < T(0)) row_neg(t);
      ++t;
    }
  }
};

template <class T>
Mat<T> convert(const IntMat& m) {
  Mat<T> r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = T(m.a[i]);
  return r;
}

Mat<BigInt> to_big(const Mat<long long>& m) { return convert<BigInt>(m); }
const Mat<BigInt>& to_big(const Mat<BigInt>& m) { return m; }

template <class T>
Snf snf_impl(const IntMat& a, bool transforms) {
  SnfWork<T> w;
  w.A = convert<T>(a);
  w.tf = transforms;
  if (transforms) {
    w.U = Mat<T>::identity(a.rows);
    w.Uinv = Mat<T>::identity(a.rows);
    w.V = Mat<T>::identity(a.cols);
    w.Vinv = Mat<T>::identity(a.cols);
  }
  w.run();
  Snf out;
  const int lim = std::min(a.rows, a.cols);
  for (int t = 0; t < lim; ++t) {
    if (is_zero(w.A(t, t))) break;
    out.diag.push_back(BigInt(w.A(t, t)));
    ++out.rank;
  }
  if (transforms) {
    out.U = to_big(w.U);
    out.Uinv = to_big(w.Uinv);
    out.V = to_big(w.V);
    out.Vinv = to_big(w.Vinv);
  }
  return out;
}

BigInt bmod(const BigInt& x, long long m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

long long to_ll(const BigInt& x) {
  if (x > BigInt(LLONG_MAX) || x < BigInt(LLONG_MIN))
    throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<long long>(x);
}

long long big_mod(const BigInt& x, long long m) { return static_cast<long long>(bmod(x, m)); }

IntMat transpose(const IntMat& m) {
  IntMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

IntMat multiply(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw PreconditionError("matrix shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) = add_(r(i, j), mul_(v, y(k, j)));
    }
  return r;
}

Snf smith_normal_form(const IntMat& a, bool transforms) {
  try {
    return snf_impl<long long>(a, transforms);
  } catch (const Overflow&) {
    return snf_impl<BigInt>(a, transforms);
  }
}

// ---------------------------------------------------------------------------

FinAbGroup::FinAbGroup(std::vector<long long> invariant_factors, int free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
  if (free_rank_ < 0) throw PreconditionError("negative free rank");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvariantViolation("invariant factor must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InvariantViolation("invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<long long>& orders) {
  int free = 0;
  std::vector<long long> fin;
  for (long long o : orders) {
    if (o < 0) throw PreconditionError("negative cyclic order");
    if (o == 0)
      ++free;
    else if (o > 1)
      fin.push_back(o);
  }
  IntMat d(static_cast<int>(fin.size()), static_cast<int>(fin.size()));
  for (std::size_t i = 0; i < fin.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = fin[i];
  Snf s = smith_normal_form(d, false);
  std::vector<long long> f;
  for (const BigInt& x : s.diag)
    if (x > 1) f.push_back(to_ll(x));
  return FinAbGroup(std::move(f), free);
}

long long FinAbGroup::order() const {
  if (free_rank_ > 0) throw PreconditionError("group is infinite");
  long long n = 1;
  for (long long d : factors_) n = mul_(n, d);
  return n;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ > 0) s = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (long long d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

long long FinAbGroup::encode(const std::vector<long long>& c) const {
  if (c.size() != factors_.size()) throw PreconditionError("coordinate length mismatch");
  long long code = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) code = code * factors_[i] + mod_ll(c[i], factors_[i]);
  return code;
}

std::vector<long long> FinAbGroup::decode(long long code) const {
  std::vector<long long> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = code % factors_[i];
    code /= factors_[i];
  }
  return c;
}

long long FinAbGroup::add(long long x, long long y) const {
  long long code = 0, mul = 1;
  for (long long d : factors_) {
    code += ((x % d + y % d) % d) * mul;
    mul *= d;
    x /= d;
    y /= d;
  }
  return code;
}

long long FinAbGroup::neg(long long x) const {
  long long code = 0, mul = 1;
  for (long long d : factors_) {
    code += ((d - x % d) % d) * mul;
    mul *= d;
    x /= d;
  }
  return code;
}

long long FinAbGroup::element_order(long long x) const {
  long long o = 1;
  for (long long d : factors_) {
    long long c = x % d;
    x /= d;
    long long oc = d / gcd_ll(c, d);
    o = o / gcd_ll(o, oc) * oc;
  }
  return o;
}

// ---------------------------------------------------------------------------

Subquotient Subquotient::compute(const IntMat& out, const IntMat& in, int dim, long long modulus) {
  if (out.cols != dim) throw PreconditionError("outgoing matrix has wrong width");
  if (in.rows != dim) throw PreconditionError("incoming matrix has wrong height");
  if (modulus < 0) throw PreconditionError("negative modulus");
  const long long m = modulus;
  Subquotient q;
  q.modulus_ = m;
  q.dim_ = dim;

  Snf s = smith_normal_form(out, true);
  q.rank_out_ = s.rank;
  for (int i = 0; i < dim; ++i) {
    if (i < s.rank) {
      if (m == 0) continue;
      long long g = gcd_ll(big_mod(s.diag[i], m), m);
      if (g > 1) {
        q.kidx_.push_back(i);
        q.kscale_.push_back(m / g);
        q.korder_.push_back(g);
      }
    } else {
      q.kidx_.push_back(i);
      q.kscale_.push_back(1);
      q.korder_.push_back(m);
    }
  }
  const int nk = static_cast<int>(q.kidx_.size());
  q.vinv_rows_ = Mat<BigInt>(nk, dim);
  for (int l = 0; l < nk; ++l)
    for (int c = 0; c < dim; ++c) q.vinv_rows_(l, c) = s.Vinv(q.kidx_[l], c);

  // image of `in` in kernel coordinates
  int nfin = 0;
  for (long long o : q.korder_)
    if (o > 0) ++nfin;
  IntMat rel(nk, in.cols + nfin);
  std::vector<char> is_kernel_row(dim, 0);
  for (int idx : q.kidx_) is_kernel_row[idx] = 1;
  for (int j = 0; j < in.cols; ++j) {
    // y = Vinv * in[:, j]
    std::vector<BigInt> y(dim);
    for (int i = 0; i < dim; ++i) {
      BigInt acc = 0;
      for (int c = 0; c < dim; ++c)
        if (in(c, j) != 0 && !s.Vinv(i, c).is_zero()) acc += s.Vinv(i, c) * in(c, j);
      y[i] = acc;
    }
    for (int i = 0; i < dim; ++i) {
      if (is_kernel_row[i]) continue;
      BigInt r = m == 0 ? y[i] : bmod(y[i], m);
      if (!r.is_zero()) throw InvariantViolation("incoming map does not land in the kernel (d∘d != 0)");
    }
    for (int l = 0; l < nk; ++l) {
      BigInt v = y[q.kidx_[l]];
      if (m != 0) {
        v = bmod(v, m);
        if (BigInt(v % q.kscale_[l]) != 0) throw InvariantViolation("image not divisible in kernel coordinates");
        v /= q.kscale_[l];
        v = bmod(v, q.korder_[l]);
      }
      rel(l, j) = to_ll(v);
    }
  }
  {
    int c = in.cols;
    for (int l = 0; l < nk; ++l)
      if (q.korder_[l] > 0) rel(l, c++) = q.korder_[l];
  }
  Snf s2 = smith_normal_form(rel, true);
  std::vector<long long> fin_orders;
  int free_count = 0;
  std::vector<int> kept;
  for (int jj = 0; jj < nk; ++jj) {
    if (jj < s2.rank) {
      if (s2.diag[jj] == 1) continue;
      kept.push_back(jj);
      q.gen_orders_.push_back(to_ll(s2.diag[jj]));
      fin_orders.push_back(q.gen_orders_.back());
    } else {
      kept.push_back(jj);
      q.gen_orders_.push_back(0);
      ++free_count;
    }
  }
  q.group_ = FinAbGroup(fin_orders, free_count);
  q.uprime_ = Mat<BigInt>(static_cast<int>(kept.size()), nk);
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (int l = 0; l < nk; ++l) q.uprime_(static_cast<int>(a), l) = s2.U(kept[a], l);
  for (int jj : kept) {
    std::vector<BigInt> g(dim, BigInt(0));
    for (int l = 0; l < nk; ++l) {
      const BigInt& coef = s2.Uinv(l, jj);
      if (coef.is_zero()) continue;
      BigInt f = coef * q.kscale_[l];
      for (int r = 0; r < dim; ++r)
        if (!s.V(r, q.kidx_[l]).is_zero()) g[r] += f * s.V(r, q.kidx_[l]);
    }
    if (m != 0)
      for (auto& x : g) x = bmod(x, m);
    q.generators_.push_back(std::move(g));
  }
  // keep a copy of the outgoing matrix for the cycle test
  q.out_ = out;
  return q;
}

std::vector<BigInt> Subquotient::coordinates(const std::vector<long long>& cycle) const {
  std::vector<BigInt> c(cycle.begin(), cycle.end());
  return coordinates(c);
}

std::vector<BigInt> Subquotient::coordinates(const std::vector<BigInt>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw PreconditionError("cycle has wrong length");
  for (int r = 0; r < out_.rows; ++r) {
    BigInt acc = 0;
    for (int c = 0; c < dim_; ++c)
      if (out_(r, c) != 0) acc += x[c] * out_(r, c);
    if (modulus_ != 0) acc = bmod(acc, modulus_);
    if (!acc.is_zero()) throw PreconditionError("vector is not a cycle");
  }
  const int nk = static_cast<int>(kidx_.size());
  std::vector<BigInt> kc(nk);
  for (int l = 0; l < nk; ++l) {
    BigInt acc = 0;
    for (int c = 0; c < dim_; ++c)
      if (!x[c].is_zero() && !vinv_rows_(l, c).is_zero()) acc += vinv_rows_(l, c) * x[c];
    if (modulus_ != 0) {
      acc = bmod(acc, modulus_);
      if (BigInt(acc % kscale_[l]) != 0) throw InvariantViolation("cycle coordinate not divisible");
      acc /= kscale_[l];
      acc = bmod(acc, korder_[l]);
    }
    kc[l] = acc;
  }
  std::vector<BigInt> out(gen_orders_.size());
  for (std::size_t a = 0; a < gen_orders_.size(); ++a) {
    BigInt acc = 0;
    for (int l = 0; l < nk; ++l)
      if (!kc[l].is_zero()) acc += uprime_(static_cast<int>(a), l) * kc[l];
    if (gen_orders_[a] > 0) acc = bmod(acc, gen_orders_[a]);
    out[a] = acc;
  }
  return out;
}

}  // namespace procat
