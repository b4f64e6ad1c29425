#include "procat/group.hpp"

#include <algorithm>
#include <numeric>

namespace procat {

FinGroup FinGroup::from_table(std::vector<int> table, int order, std::string name) {
  if (order < 1) throw PreconditionError("group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order) throw InvariantViolation("multiplication table has wrong size");
  for (int v : table)
    if (v < 0 || v >= order) throw InvariantViolation("multiplication table entry out of range");
  FinGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g.table_[static_cast<std::size_t>(a) * order + b] == 0) {
        g.inv_[a] = b;
        break;
      }
  g.abelian_ = true;
  for (int a = 0; a < order && g.abelian_; ++a)
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }
  g.check_axioms();
  return g;
}

FinGroup FinGroup::from_abelian(const FinAbGroup& a, std::string name) {
  return abelian_blocks({a}, name.empty() ? a.to_string() : std::move(name));
}

FinGroup FinGroup::abelian_blocks(std::vector<FinAbGroup> blocks, std::string name) {
  if (blocks.empty()) blocks.push_back(FinAbGroup());
  FinGroup g;
  long long order = 1;
  std::vector<long long> orders;
  for (const auto& b : blocks) {
    if (!b.is_finite()) throw PreconditionError("group must be finite");
    g.block_size_.push_back(b.order());
    order *= b.order();
    if (order > (1LL << 30)) throw BudgetExceeded("abelian group too large to index");
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  }
  g.order_ = static_cast<int>(order);
  g.ab_ = FinAbGroup::from_cyclic_orders(orders);
  g.blocks_ = std::move(blocks);
  g.abelian_ = true;
  g.name_ = name.empty() ? g.ab_->to_string() : std::move(name);
  return g;
}

FinGroup FinGroup::cyclic(int n) { return from_abelian(FinAbGroup::cyclic(n), "Z/" + std::to_string(n)); }

FinGroup FinGroup::symmetric3() {
  // permutations of {0,1,2} in lexicographic order, identity first
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return from_table(std::move(t), 6, "S3");
}

FinGroup FinGroup::direct_product(const FinGroup& g, const FinGroup& h) {
  // element codes are (a, b) -> a*|h| + b, so this is always table-backed
  const int n = g.order() * h.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x) * n + y] = g.mul(x / h.order(), y / h.order()) * h.order() + h.mul(x % h.order(), y % h.order());
  return from_table(std::move(t), n, g.name() + " x " + h.name());
}

int FinGroup::mul(int a, int b) const {
  if (!blocks_.empty()) {
    long long code = 0, m = 1, x = a, y = b;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const long long n = block_size_[i];
      code += blocks_[i].add(x % n, y % n) * m;
      m *= n;
      x /= n;
      y /= n;
    }
    return static_cast<int>(code);
  }
  return table_[static_cast<std::size_t>(a) * order_ + b];
}

int FinGroup::inv(int a) const {
  if (!blocks_.empty()) {
    long long code = 0, m = 1, x = a;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const long long n = block_size_[i];
      code += blocks_[i].neg(x % n) * m;
      m *= n;
      x /= n;
    }
    return static_cast<int>(code);
  }
  return inv_[a];
}

int FinGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

void FinGroup::check_axioms() const {
  for (int a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw InvariantViolation("group axiom: 0 is not a two-sided identity");
    int i = inv(a);
    if (i < 0 || mul(a, i) != 0 || mul(i, a) != 0) throw InvariantViolation("group axiom: missing inverse");
  }
  if (!blocks_.empty()) return;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvariantViolation("group axiom: associativity fails");
}

bool is_homomorphism(const FinGroup& g, const FinGroup& h, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

std::vector<int> generators(const FinGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> span{0};
  for (int c = 1; c < g.order(); ++c) {
    if (in[c]) continue;
    gens.push_back(c);
    // closure of span ∪ {gens}
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(span);
      for (int x : cur)
        for (int s : gens) {
          int y = g.mul(x, s);
          if (!in[y]) {
            in[y] = 1;
            span.push_back(y);
            grew = true;
          }
        }
    }
  }
  return gens;
}

std::vector<std::vector<int>> all_homomorphisms(const FinGroup& g, const FinGroup& h, std::size_t limit) {
  std::vector<int> gens = generators(g);
  std::vector<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  for (;;) {
    // extend by BFS over words in the generators
    std::vector<int> f(g.order(), -1);
    f[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      int x = queue[q];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int y = g.mul(x, gens[s]);
        int v = h.mul(f[x], img[s]);
        if (f[y] < 0) {
          f[y] = v;
          queue.push_back(y);
        } else if (f[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok && is_homomorphism(g, h, f)) {
      if (out.size() >= limit) throw BudgetExceeded("too many homomorphisms");
      out.push_back(std::move(f));
    }
    std::size_t p = 0;
    while (p < img.size() && ++img[p] == h.order()) img[p++] = 0;
    if (p == img.size()) break;
  }
  return out;
}

FinAbGroup abelian_type_from_orders(const std::vector<int>& ord) {
  // for each prime p, #{a : ord(a) | p^j} = p^(sum_i min(j, e_i)) determines the exponents e_i
  std::vector<long long> orders;
  int rest = static_cast<int>(ord.size());
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    std::vector<int> cnt;
    for (long long q = 1; q <= pk; q *= p) {
      int c = 0;
      for (int o : ord)
        if (q % o == 0) ++c;
      cnt.push_back(c);
    }
    // log_p(cnt[j] / cnt[j-1]) = number of cyclic factors of order >= p^j
    std::vector<int> ge;
    for (std::size_t j = 1; j < cnt.size(); ++j) {
      int ratio = cnt[j] / cnt[j - 1], e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      ge.push_back(e);
    }
    for (std::size_t j = 0; j < ge.size(); ++j) {
      int exactly = ge[j] - (j + 1 < ge.size() ? ge[j + 1] : 0);
      long long pw = 1;
      for (std::size_t t = 0; t <= j; ++t) pw *= p;
      for (int r = 0; r < exactly; ++r) orders.push_back(pw);
    }
  }
  return FinAbGroup::from_cyclic_orders(orders);
}

FinAbGroup abelian_type(const FinGroup& g) {
  if (!g.is_abelian()) throw PreconditionError("group is not abelian");
  if (g.abelian_structure()) return *g.abelian_structure();
  std::vector<int> ord(g.order());
  for (int a = 0; a < g.order(); ++a) ord[a] = g.element_order(a);
  return abelian_type_from_orders(ord);
}

void GModule::check() const {
  const int na = static_cast<int>(module.order());
  if (act.size() != static_cast<std::size_t>(group.order()) * na) throw InvariantViolation("action table has wrong size");
  for (int a = 0; a < na; ++a)
    if (apply(0, a) != a) throw InvariantViolation("G-module: identity does not act trivially");
  for (int g = 0; g < group.order(); ++g)
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        if (apply(g, static_cast<int>(module.add(a, b))) != static_cast<int>(module.add(apply(g, a), apply(g, b))))
          throw InvariantViolation("G-module: action is not by homomorphisms");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int a = 0; a < na; ++a)
        if (apply(group.mul(g, h), a) != apply(g, apply(h, a))) throw InvariantViolation("G-module: (gh)a != g(ha)");
}

GModule GModule::trivial(const FinGroup& g, const FinAbGroup& a) {
  GModule m{g, a, {}};
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < a.order(); ++y) m.act.push_back(y);
  return m;
}

GModule GModule::inversion(const FinAbGroup& a) {
  GModule m{FinGroup::cyclic(2), a, {}};
  for (int y = 0; y < a.order(); ++y) m.act.push_back(y);
  for (int y = 0; y < a.order(); ++y) m.act.push_back(static_cast<int>(a.neg(y)));
  return m;
}

}  // namespace procat
