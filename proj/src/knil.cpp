#include "procat/knil.hpp"

#include <regex>

#include "procat/search.hpp"

namespace procat {

int KNilCertificate::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  throw PreconditionError("unknown certificate node " + id);
}

bool same_structure(const TauSSet& a, const TauSSet& b) {
  const int top = std::max(a.cosk_level(), b.cosk_level()) + 1;
  for (int k = 0; k <= top; ++k) {
    const Level& la = a.level(k);
    const Level& lb = b.level(k);
    if (la.count != lb.count || la.faces != lb.faces || la.degens != lb.degens) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

FinGroup parse_group(const std::string& s) {
  if (s == "S3") return FinGroup::symmetric3();
  std::smatch m;
  static const std::regex cyc(R"(Z/(\d+))");
  if (std::regex_match(s, m, cyc)) return FinGroup::cyclic(std::stoi(m[1]));
  throw PreconditionError("unknown group " + s);
}

struct Label {
  enum Kind { Point, Discrete, B, K, KhZ2, L } kind;
  int size = 0;  // discrete size or cyclic order
  int n = 0;
  std::string group;
};

std::optional<Label> parse_label(const std::string& s) {
  static const std::regex disc(R"(K\(S,0\):(\d+))");
  static const std::regex bg(R"(B\((Z/\d+|S3)\))");
  static const std::regex k(R"(K\(Z/(\d+),(\d+)\))");
  static const std::regex khg(R"(K\(Z/(\d+),(\d+)\)_hZ/2)");
  static const std::regex l(R"(L\(Z/(\d+),(\d+)\))");
  std::smatch m;
  if (s == "point") return Label{Label::Point, 0, 0, {}};
  if (std::regex_match(s, m, disc)) return Label{Label::Discrete, std::stoi(m[1]), 0, {}};
  if (std::regex_match(s, m, bg)) {
    Label x{Label::B, 0, 0, {}};
    x.group = m[1];
    x.size = parse_group(x.group).order();
    return x;
  }
  if (std::regex_match(s, m, k)) return Label{Label::K, std::stoi(m[1]), std::stoi(m[2]), {}};
  if (std::regex_match(s, m, khg)) return Label{Label::KhZ2, std::stoi(m[1]), std::stoi(m[2]), {}};
  if (std::regex_match(s, m, l)) return Label{Label::L, std::stoi(m[1]), std::stoi(m[2]), {}};
  return std::nullopt;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

KNilBasis KNilBasis::kp(int p) {
  if (!is_prime(p)) throw PreconditionError("Kp needs a prime");
  return {"Kp:" + std::to_string(p), p, {}};
}

KNilBasis KNilBasis::parse(const std::string& s) {
  if (s == "Kpi") return kpi();
  if (s.rfind("Kp:", 0) == 0) return kp(std::stoi(s.substr(3)));
  throw PreconditionError("unknown basis " + s + " (expected Kpi or Kp:<prime>)");
}

bool KNilBasis::admits(const std::string& label) const {
  if (!custom.empty() || (name != "Kpi" && prime == 0)) {
    for (const auto& [n, x] : custom)
      if (n == label) return true;
    return false;
  }
  auto l = parse_label(label);
  if (!l) return false;
  if (prime > 0) {
    switch (l->kind) {
      case Label::Point:
      case Label::Discrete:
        return true;
      case Label::B:
        return l->group == "Z/" + std::to_string(prime);
      case Label::K:
        return l->size == prime && l->n >= 1;
      default:
        return false;
    }
  }
  switch (l->kind) {
    case Label::K:
    case Label::KhZ2:
      return l->n >= 1 && l->size >= 1;
    case Label::L:
      return l->n >= 2 && l->size >= 1;
    default:
      return true;
  }
}

TauSSet KNilBasis::element(const std::string& label) const {
  for (const auto& [n, x] : custom)
    if (n == label) return x;
  auto l = parse_label(label);
  if (!l) throw PreconditionError("unparseable basis label " + label);
  switch (l->kind) {
    case Label::Point:
      return point();
    case Label::Discrete:
      return discrete(l->size);
    case Label::B:
      return b_group(parse_group(l->group));
    case Label::K:
      if (l->n == 1) return b_group(FinGroup::cyclic(l->size));
      return k_abelian(FinAbGroup::cyclic(l->size), l->n).sset;
    case Label::KhZ2: {
      SimplicialGroup k = k_abelian(FinAbGroup::cyclic(l->size), l->n);
      const int c = k.sset.cosk_level();
      return homotopy_quotient(module_action_on_k(GModule::inversion(FinAbGroup::cyclic(l->size)), k), c, c + 1)
          .renamed(label);
    }
    case Label::L:
      return l_to_k_fibration(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(l->size)), l->n - 1).l;
  }
  throw PreconditionError("unhandled label " + label);
}

// ---------------------------------------------------------------------------

LToK l_to_k_fibration(const GModule& m, int n) {
  const int nk = n == 1 ? 2 : n + 1;
  const int cw = nk + 1, stored = nk + 2;
  SimplicialGroup k = k_abelian(m.module, n, stored);
  WConstruction w = w_constructions(k, cw, stored);
  const std::string an = m.module.to_string();
  if (m.group.order() == 1)
    return {w.w.renamed("L(" + an + "," + std::to_string(n + 1) + ")"),
            w.wbar.renamed("Wbar K(" + an + "," + std::to_string(n) + ")"), w.projection};
  GAction ak = module_action_on_k(m, k);
  ak.extend_to(stored);
  const FinGroup& G = m.group;
  auto act_on = [&](const TauSSet& space, const std::vector<std::vector<std::vector<int>>>& tuples, int shift) {
    GAction a{G, space, {}};
    for (int lv = 0; lv <= stored; ++lv) {
      std::vector<int> radix;
      for (int j = 0; j <= lv - shift; ++j) radix.push_back(k.groups[lv - shift - j].order());
      const int cnt = space.count(lv);
      std::vector<int> t(static_cast<std::size_t>(G.order()) * cnt);
      for (int g = 0; g < G.order(); ++g)
        for (int c = 0; c < cnt; ++c) {
          std::vector<int> h = tuples[lv][c];
          for (std::size_t j = 0; j < h.size(); ++j) h[j] = ak.apply(lv - shift - static_cast<int>(j), g, h[j]);
          t[static_cast<std::size_t>(g) * cnt + c] = static_cast<int>(encode_radix(h, radix));
        }
      a.act.push_back(std::move(t));
    }
    a.check();
    return a;
  };
  GAction aw = act_on(w.w, w.w_tuples, 0);
  GAction ab = act_on(w.wbar, w.wbar_tuples, 1);
  TauSSet lq = homotopy_quotient(aw, cw, stored).renamed("L(" + an + "," + std::to_string(n + 1) + ")_hG");
  TauSSet kq = homotopy_quotient(ab, cw, stored).renamed("K(" + an + "," + std::to_string(n + 1) + ")_hG");
  std::vector<std::vector<int>> pl(stored + 1);
  long long gk = 1;
  for (int lv = 0; lv <= stored; ++lv) {
    const int cnt = lq.count(lv);
    pl[lv].resize(cnt);
    for (int c = 0; c < cnt; ++c) {
      const long long x = c / gk, tup = c % gk;
      pl[lv][c] = static_cast<int>(w.projection(lv, static_cast<int>(x)) * gk + tup);
    }
    gk *= G.order();
  }
  return {lq, kq, SimplicialMap(lq, kq, std::move(pl))};
}

HomotopyGroup pi1_via_minimal(const TauSSet& x) {
  MinimalModel mm = minimalize(x);
  return homotopy_group(mm.sub.object, 0, 1, true);
}

namespace {

std::string describe_group(const HomotopyGroup& h) {
  if (h.abelian) return h.abelian->to_string();
  return "nonabelian of order " + std::to_string(h.group.order());
}

}  // namespace

std::vector<ClassifyingCandidate> classifying_map_search(const TauSSet& base, const SimplicialMap& p,
                                                          const TauSSet& expected, std::size_t limit) {
  std::vector<ClassifyingCandidate> out;
  for (auto& f : all_maps(base, p.target(), limit)) {
    ClassifyingCandidate c;
    c.map = f;
    Pullback pb = pullback(f, p);
    c.pullback_matches = find_isomorphism(pb.object, expected).has_value();
    HomotopyGroup h = pi1_via_minimal(pb.object);
    c.pi1_order = h.group.order();
    if (h.abelian) c.pi1_pullback = {*h.abelian};
    out.push_back(std::move(c));
  }
  return out;
}

StageVerdict postnikov_stage_verify(const TauSSet& x, const TauSSet& x_prev, const GModule& m, int n,
                                    const std::optional<SimplicialMap>& classifying_map) {
  StageVerdict v;
  bool prev_point = true;
  for (int k = 0; k <= x_prev.cosk_level() + 1; ++k) prev_point = prev_point && x_prev.count(k) == 1;
  if (n == 1 && prev_point && m.module.order() == 1) {
    v.ok = find_isomorphism(x, b_group(m.group)).has_value();
    if (!v.ok) v.condition = "X(1) is not isomorphic to B(" + m.group.name() + ")";
    return v;
  }
  if (!classifying_map) {
    v.condition = "classifying map missing";
    return v;
  }
  LToK lk = l_to_k_fibration(m, n);
  if (!same_structure(classifying_map->source(), x_prev)) {
    v.condition = "classifying map does not start at X(n-1)";
    return v;
  }
  if (!same_structure(classifying_map->target(), lk.k)) {
    v.condition = "classifying map does not land in K(A,n+1)_hG";
    return v;
  }
  auto fib = is_kan_fibration(lk.projection);
  if (!fib.ok) {
    v.condition = "right leg fails horn lifting";
    return v;
  }
  Pullback pb = pullback(*classifying_map, lk.projection);
  HomotopyGroup h = pi1_via_minimal(pb.object);
  v.pi1_order_pullback = h.group.order();
  v.pi1_pullback = describe_group(h);
  if (!find_isomorphism(x, pb.object)) {
    v.condition = "X is not isomorphic to the strict pullback (pi1 of pullback " + v.pi1_pullback + ")";
    return v;
  }
  v.ok = true;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

struct NodeResult {
  std::optional<std::string> failure;
  std::string info;
};

bool endpoints(const SimplicialMap& f, const TauSSet& s, const TauSSet& t) {
  return same_structure(f.source(), s) && same_structure(f.target(), t);
}

bool is_point(const TauSSet& x) {
  for (int k = 0; k <= x.cosk_level() + 1; ++k)
    if (x.count(k) != 1) return false;
  return true;
}

std::vector<int> pi_orders(const TauSSet& minimal, int bound) {
  std::vector<int> out{pi0(minimal)};
  for (int k = 1; k <= bound; ++k) {
    if (k > minimal.cosk_level()) {
      out.push_back(1);
      continue;
    }
    out.push_back(homotopy_group(minimal, 0, k, true).group.order());
  }
  return out;
}

NodeResult check_node(const KNilCertificate& cert, int idx, const KNilBasis& basis, Exec exec) {
  const KNilNode& nd = cert.nodes[idx];
  NodeResult r;
  auto child = [&](int i) -> const KNilNode& { return cert.nodes[nd.children[i]]; };
  switch (nd.kind) {
    case KNilKind::Leaf: {
      if (!basis.admits(nd.label)) {
        r.failure = "label " + nd.label + " is not in basis " + basis.name;
        return r;
      }
      TauSSet rep = basis.element(nd.label);
      if (nd.iso) {
        if (!endpoints(*nd.iso, nd.object, rep)) r.failure = "isomorphism witness has the wrong endpoints";
        else if (!is_isomorphism(*nd.iso)) r.failure = "isomorphism witness is not bijective";
      } else if (!find_isomorphism(nd.object, rep)) {
        r.failure = "not isomorphic to " + nd.label;
      }
      r.info = "leaf " + nd.label;
      return r;
    }
    case KNilKind::Point:
      if (!is_point(nd.object)) r.failure = "object is not a point";
      r.info = "point";
      return r;
    case KNilKind::Iso:
      if (!nd.iso) r.failure = "iso node without a map";
      else if (!endpoints(*nd.iso, nd.object, child(0).object)) r.failure = "iso map has the wrong endpoints";
      else if (!is_isomorphism(*nd.iso)) r.failure = "iso map is not bijective";
      r.info = "iso to " + child(0).id;
      return r;
    case KNilKind::Retract: {
      if (!nd.section || !nd.retraction) {
        r.failure = "retract node needs section and retraction";
        return r;
      }
      if (!endpoints(*nd.section, nd.object, child(0).object) || !endpoints(*nd.retraction, child(0).object, nd.object))
        r.failure = "section/retraction have the wrong endpoints";
      else if (!maps_equal(SimplicialMap::compose(*nd.retraction, *nd.section), SimplicialMap::identity(nd.object)))
        r.failure = "retraction after section is not the identity";
      r.info = "retract of " + child(0).id;
      return r;
    }
    case KNilKind::WeakEquivalence: {
      const TauSSet& other = child(0).object;
      if (!is_kan(nd.object, exec).kan || !is_kan(other, exec).kan) {
        r.failure = "weak-equivalence node needs Kan complexes";
        return r;
      }
      TauSSet ma = minimalize(nd.object).sub.object, mb = minimalize(other).sub.object;
      if (nd.we_method == WeMethod::MinimalIso) {
        if (!find_isomorphism(ma, mb)) r.failure = "minimal models are not isomorphic";
        r.info = "weak equivalence to " + child(0).id + " (minimal models " + describe_counts(ma, 2) + ")";
      } else {
        auto pa = pi_orders(ma, nd.we_bound), pb = pi_orders(mb, nd.we_bound);
        if (pa != pb) r.failure = "homotopy group orders of minimal models differ";
        r.info = "weak equivalence to " + child(0).id + " (homotopy groups through " + std::to_string(nd.we_bound) + ")";
      }
      return r;
    }
    case KNilKind::Pullback: {
      if (!nd.leg_x || !nd.leg_y || !nd.pr_x || !nd.pr_y) {
        r.failure = "pullback node needs both legs and both projections";
        return r;
      }
      const TauSSet &X = child(0).object, &Y = child(1).object, &Z = child(2).object;
      if (!endpoints(*nd.leg_x, X, Z) || !endpoints(*nd.leg_y, Y, Z) || !endpoints(*nd.pr_x, nd.object, X) ||
          !endpoints(*nd.pr_y, nd.object, Y)) {
        r.failure = "pullback maps have the wrong endpoints";
        return r;
      }
      if (!maps_equal(SimplicialMap::compose(*nd.leg_x, *nd.pr_x), SimplicialMap::compose(*nd.leg_y, *nd.pr_y))) {
        r.failure = "square does not commute";
        return r;
      }
      const SimplicialMap& fib = nd.marked == 0 ? *nd.leg_x : *nd.leg_y;
      auto fv = is_kan_fibration(fib, exec);
      if (!fv.ok) {
        r.failure = "marked leg fails horn lifting at dimension " + std::to_string(fv.checked_up_to);
        return r;
      }
      Pullback pb = pullback(*nd.leg_x, *nd.leg_y);
      if (!is_isomorphism(pullback_pair(pb, *nd.pr_x, *nd.pr_y)))
        r.failure = "not a strict pullback: induced map to X x_Z Y is not an isomorphism";
      r.info = "pullback of " + child(0).id + " -> " + child(2).id + " <- " + child(1).id;
      return r;
    }
  }
  r.failure = "unknown node kind";
  return r;
}

std::optional<std::pair<int, std::string>> check_shape(const KNilCertificate& cert) {
  const int n = static_cast<int>(cert.nodes.size());
  if (cert.root < 0 || cert.root >= n) return std::pair{-1, std::string("root index out of range")};
  std::vector<int> parents(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& nd = cert.nodes[i];
    std::size_t arity = 0;
    switch (nd.kind) {
      case KNilKind::Leaf:
      case KNilKind::Point:
        arity = 0;
        break;
      case KNilKind::Pullback:
        arity = 3;
        break;
      default:
        arity = 1;
    }
    if (nd.children.size() != arity) return std::pair{i, "expected " + std::to_string(arity) + " children"};
    if (nd.kind == KNilKind::Retract && i != cert.root) return std::pair{i, std::string("retract node below the root")};
    for (int c : nd.children) {
      if (c < 0 || c >= n) return std::pair{i, std::string("child index out of range")};
      ++parents[c];
    }
  }
  for (int i = 0; i < n; ++i) {
    const int want = i == cert.root ? 0 : 1;
    if (parents[i] != want) return std::pair{i, "node has " + std::to_string(parents[i]) + " parents"};
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{cert.root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (seen[i]) return std::pair{i, std::string("cycle")};
    seen[i] = 1;
    for (int c : cert.nodes[i].children) stack.push_back(c);
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) return std::pair{i, std::string("node not reachable from the root")};
  return std::nullopt;
}

}  // namespace

KNilVerdict knil_check(const KNilCertificate& cert, const KNilBasis& basis, Exec exec) {
  KNilVerdict v;
  if (auto bad = check_shape(cert)) {
    v.failing_node = bad->first >= 0 ? cert.nodes[bad->first].id : "";
    v.condition = "tree: " + bad->second;
    return v;
  }
  const int n = static_cast<int>(cert.nodes.size());
  std::vector<NodeResult> res(n);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
  for (int i = 0; i < n; ++i) {
    try {
      res[i] = check_node(cert, i, basis, Exec::Serial);
    } catch (const std::exception& e) {
      res[i].failure = std::string("exception: ") + e.what();
    }
  }
  for (int i = 0; i < n; ++i) {
    v.log.push_back(cert.nodes[i].id + ": " + res[i].info + (res[i].failure ? " FAILED: " + *res[i].failure : " ok"));
    if (res[i].failure && v.failing_node.empty() && v.condition.empty()) {
      v.failing_node = cert.nodes[i].id;
      v.condition = *res[i].failure;
    }
  }
  v.accepted = v.condition.empty();
  v.retract_only = v.accepted && cert.nodes[cert.root].kind == KNilKind::Retract;
  return v;
}

}  // namespace procat
