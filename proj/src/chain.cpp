#include "procat/chain.hpp"

#include <algorithm>

namespace procat {

void ChainComplex::check() const {
  for (int k = 2; k <= top(); ++k) {
    IntMat p = multiply(boundary[k - 1], boundary[k]);
    for (long long v : p.a)
      if (v != 0) throw InvariantViolation("boundary of boundary is nonzero at degree " + std::to_string(k));
  }
}

ChainComplex normalized_chains(const TauSSet& x, int top) {
  ChainComplex c;
  std::vector<std::vector<int>> basis(top + 1), pos(top + 1);
  for (int k = 0; k <= top; ++k) {
    basis[k] = x.nondegenerate(k);
    pos[k].assign(x.count(k), -1);
    for (std::size_t t = 0; t < basis[k].size(); ++t) pos[k][basis[k][t]] = static_cast<int>(t);
    c.ranks.push_back(static_cast<int>(basis[k].size()));
  }
  c.boundary.emplace_back(0, c.ranks[0]);
  for (int k = 1; k <= top; ++k) {
    IntMat m(c.ranks[k - 1], c.ranks[k]);
    for (int col = 0; col < c.ranks[k]; ++col)
      for (int i = 0; i <= k; ++i) {
        int f = pos[k - 1][x.d(k, i, basis[k][col])];
        if (f >= 0) m(f, col) += (i % 2 == 0) ? 1 : -1;
      }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

ChainComplex shifted_group(const FinAbGroup& a, int n) {
  const int gens = a.free_rank() + static_cast<int>(a.invariant_factors().size());
  const int rels = static_cast<int>(a.invariant_factors().size());
  ChainComplex c;
  for (int k = 0; k <= n + 1; ++k) c.ranks.push_back(k == n ? gens : k == n + 1 ? rels : 0);
  c.boundary.emplace_back(0, c.ranks[0]);
  for (int k = 1; k <= n + 1; ++k) {
    IntMat m(c.ranks[k - 1], c.ranks[k]);
    if (k == n + 1)
      for (int r = 0; r < rels; ++r) m(a.free_rank() + r, r) = a.invariant_factors()[r];
    c.boundary.push_back(std::move(m));
  }
  return c;
}

namespace {

IntMat out_of(const ChainComplex& c, int k) { return c.boundary[k]; }
IntMat in_of(const ChainComplex& c, int k) {
  if (k + 1 <= c.top()) return c.boundary[k + 1];
  return IntMat(c.ranks[k], 0);
}

}  // namespace

std::vector<FinAbGroup> homology(const ChainComplex& c, int bound, long long modulus) {
  if (bound + 1 > c.top()) throw PreconditionError("homology needs chains one degree above the bound");
  std::vector<FinAbGroup> out;
  for (int k = 0; k <= bound; ++k) out.push_back(Subquotient::compute(out_of(c, k), in_of(c, k), c.ranks[k], modulus).group());
  return out;
}

std::vector<FinAbGroup> homology(const TauSSet& x, int bound, long long modulus) {
  return homology(normalized_chains(x, bound + 1), bound, modulus);
}

std::vector<FinAbGroup> cohomology(const TauSSet& x, int bound, long long modulus) {
  ChainComplex c = normalized_chains(x, bound + 1);
  std::vector<FinAbGroup> out;
  for (int k = 0; k <= bound; ++k) {
    IntMat o = transpose(c.boundary[k + 1]);
    IntMat i = transpose(c.boundary[k]);
    out.push_back(Subquotient::compute(o, i, c.ranks[k], modulus).group());
  }
  return out;
}

GradedPiece homology_piece(const TauSSet& x, int k, long long modulus) {
  ChainComplex c = normalized_chains(x, k + 1);
  GradedPiece p;
  p.degree = k;
  p.basis = x.nondegenerate(k);
  p.q = Subquotient::compute(c.boundary[k], c.boundary[k + 1], c.ranks[k], modulus);
  return p;
}

GradedPiece cohomology_piece(const TauSSet& x, int k, long long modulus) {
  ChainComplex c = normalized_chains(x, k + 1);
  GradedPiece p;
  p.degree = k;
  p.cohomological = true;
  p.basis = x.nondegenerate(k);
  p.q = Subquotient::compute(transpose(c.boundary[k + 1]), transpose(c.boundary[k]), c.ranks[k], modulus);
  return p;
}

IntMat induced_on_homology(const SimplicialMap& f, const GradedPiece& src, const GradedPiece& dst) {
  const int k = src.degree;
  const TauSSet& y = f.target();
  std::vector<int> pos(y.count(k), -1);
  for (std::size_t t = 0; t < dst.basis.size(); ++t) pos[dst.basis[t]] = static_cast<int>(t);
  IntMat m(dst.q.num_generators(), src.q.num_generators());
  for (int g = 0; g < src.q.num_generators(); ++g) {
    std::vector<BigInt> img(dst.basis.size(), BigInt(0));
    const auto& gen = src.q.generator(g);
    for (std::size_t t = 0; t < src.basis.size(); ++t) {
      if (gen[t].is_zero()) continue;
      int p = pos[f(k, src.basis[t])];
      if (p >= 0) img[p] += gen[t];
    }
    if (dst.q.modulus() != 0)
      for (auto& v : img) v = BigInt(big_mod(v, dst.q.modulus()));
    auto coords = dst.q.coordinates(img);
    for (int r = 0; r < m.rows; ++r) m(r, g) = to_ll(coords[r]);
  }
  return m;
}

IntMat induced_on_cohomology(const SimplicialMap& f, const GradedPiece& src_x, const GradedPiece& dst_y) {
  const int k = src_x.degree;
  std::vector<int> pos(f.target().count(k), -1);
  for (std::size_t t = 0; t < dst_y.basis.size(); ++t) pos[dst_y.basis[t]] = static_cast<int>(t);
  IntMat m(src_x.q.num_generators(), dst_y.q.num_generators());
  for (int g = 0; g < dst_y.q.num_generators(); ++g) {
    const auto& phi = dst_y.q.generator(g);
    std::vector<BigInt> pulled(src_x.basis.size(), BigInt(0));
    for (std::size_t t = 0; t < src_x.basis.size(); ++t) {
      int p = pos[f(k, src_x.basis[t])];
      if (p >= 0) pulled[t] = phi[p];
    }
    auto coords = src_x.q.coordinates(pulled);
    for (int r = 0; r < m.rows; ++r) m(r, g) = to_ll(coords[r]);
  }
  return m;
}

namespace {

// Hom(A, Z/m) and Ext(A, Z/m), A ⊗ Z/m and Tor(A, Z/m) all reduce to gcds.
std::vector<long long> tensor_orders(const FinAbGroup& a, long long m) {
  std::vector<long long> o;
  for (int i = 0; i < a.free_rank(); ++i) o.push_back(m);
  for (long long d : a.invariant_factors()) o.push_back(gcd_ll(d, m));
  return o;
}
std::vector<long long> torsion_orders(const FinAbGroup& a, long long m) {
  std::vector<long long> o;
  for (long long d : a.invariant_factors()) o.push_back(gcd_ll(d, m));
  return o;
}

}  // namespace

FinAbGroup uct_cohomology(const FinAbGroup& hk, const FinAbGroup& hk_minus_1, long long m) {
  // Hom(H_k, Z/m) + Ext(H_{k-1}, Z/m)
  auto o = tensor_orders(hk, m);
  auto e = torsion_orders(hk_minus_1, m);
  o.insert(o.end(), e.begin(), e.end());
  return FinAbGroup::from_cyclic_orders(o);
}

FinAbGroup uct_homology(const FinAbGroup& hk, const FinAbGroup& hk_minus_1, long long m) {
  // H_k ⊗ Z/m + Tor(H_{k-1}, Z/m)
  auto o = tensor_orders(hk, m);
  auto e = torsion_orders(hk_minus_1, m);
  o.insert(o.end(), e.begin(), e.end());
  return FinAbGroup::from_cyclic_orders(o);
}

FinAbGroup cokernel(const std::vector<long long>& target_orders, const IntMat& m) {
  const int t = static_cast<int>(target_orders.size());
  if (m.rows != t) throw PreconditionError("cokernel: row count mismatch");
  int extra = 0;
  for (long long o : target_orders)
    if (o > 0) ++extra;
  IntMat rel(t, m.cols + extra);
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < m.cols; ++c) rel(r, c) = m(r, c);
  int c = m.cols;
  for (int r = 0; r < t; ++r)
    if (target_orders[r] > 0) rel(r, c++) = target_orders[r];
  Snf s = smith_normal_form(rel, false);
  std::vector<long long> orders;
  for (int i = 0; i < t; ++i) orders.push_back(i < s.rank ? to_ll(s.diag[i]) : 0);
  return FinAbGroup::from_cyclic_orders(orders);
}

}  // namespace procat
