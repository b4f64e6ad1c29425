#include "procat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "procat/profinite.hpp"

namespace procat {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void expect_schema(const Json& j, const std::string& schema) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != schema)
    throw SchemaError("expected schema " + schema);
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j[key];
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::type_error&) {
    throw SchemaError(std::string("field \"") + key + "\" has the wrong type");
  }
}

int find_name(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(); }

std::string hash_hex(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

// ---------------------------------------------------------------------------
// fincat.v1

Json fincat_to_json(const FinCategory& c) {
  Json j;
  j["schema"] = "fincat.v1";
  j["objects"] = c.objects;
  Json ms = Json::array();
  for (int f = 0; f < c.num_morphisms(); ++f) {
    Json m{{"id", c.morphisms[f]}, {"dom", c.objects[c.dom[f]]}, {"cod", c.objects[c.cod[f]]}};
    if (c.is_identity(f)) m["identity"] = true;
    ms.push_back(m);
  }
  j["morphisms"] = ms;
  Json comp = Json::array();
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      const int gf = c.compose(g, f);
      if (gf >= 0 && !c.is_identity(f) && !c.is_identity(g))
        comp.push_back({c.morphisms[g], c.morphisms[f], c.morphisms[gf]});
    }
  j["composition"] = comp;
  return j;
}

FinCategory fincat_from_json(const Json& j) {
  expect_schema(j, "fincat.v1");
  FinCategory c;
  c.objects = get<std::vector<std::string>>(j, "objects");
  std::set<std::string> seen(c.objects.begin(), c.objects.end());
  if (seen.size() != c.objects.size()) throw SchemaError("duplicate object ids");
  c.identity.assign(c.objects.size(), -1);
  for (const auto& m : field(j, "morphisms")) {
    const auto id = get<std::string>(m, "id");
    const int d = find_name(c.objects, get<std::string>(m, "dom")), e = find_name(c.objects, get<std::string>(m, "cod"));
    if (d < 0 || e < 0) throw SchemaError("morphism " + id + " names an unknown object");
    if (find_name(c.morphisms, id) >= 0) throw SchemaError("duplicate morphism id " + id);
    c.morphisms.push_back(id);
    c.dom.push_back(d);
    c.cod.push_back(e);
    if (m.value("identity", false)) {
      if (d != e || c.identity[d] >= 0) throw SchemaError("bad identity " + id);
      c.identity[d] = c.num_morphisms() - 1;
    }
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (c.identity[o] < 0) {
      c.morphisms.push_back("id_" + c.objects[o]);
      c.dom.push_back(o);
      c.cod.push_back(o);
      c.identity[o] = c.num_morphisms() - 1;
    }
  const int n = c.num_morphisms();
  c.comp.assign(static_cast<std::size_t>(n) * n, -1);
  auto slot = [&](int g, int f) -> int& { return c.comp[static_cast<std::size_t>(g) * n + f]; };
  for (int f = 0; f < n; ++f) {
    slot(c.identity[c.cod[f]], f) = f;
    slot(f, c.identity[c.dom[f]]) = f;
  }
  if (j.contains("composition"))
    for (const auto& t : j["composition"]) {
      if (!t.is_array() || t.size() != 3) throw SchemaError("composition entries are [g, f, gf]");
      if (!t[0].is_string() || !t[1].is_string() || !t[2].is_string()) throw SchemaError("composition entries are ids");
      const int g = find_name(c.morphisms, t[0]), f = find_name(c.morphisms, t[1]), gf = find_name(c.morphisms, t[2]);
      if (g < 0 || f < 0 || gf < 0) throw SchemaError("composition names an unknown morphism");
      if (c.cod[f] != c.dom[g]) throw SchemaError("composition of non-composable " + c.morphisms[g] + ", " + c.morphisms[f]);
      slot(g, f) = gf;
    }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (c.cod[f] == c.dom[g] && slot(g, f) < 0)
        throw SchemaError("missing composite " + c.morphisms[g] + " ∘ " + c.morphisms[f]);
  c.validate();
  return c;
}

namespace {

MorphismClass class_from_json(const FinCategory& c, const Json& j) {
  if (j.is_string()) {
    if (j == "isos") return isomorphisms(c);
    if (j == "all") return all_morphisms(c);
    throw SchemaError("morphism class must be \"isos\", \"all\" or a list");
  }
  try {
    return class_from_names(c, j.get<std::vector<std::string>>());
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  } catch (const Json::type_error&) {
    throw SchemaError("morphism class must be \"isos\", \"all\" or a list");
  }
}

}  // namespace

WfcInput wfc_from_json(const Json& j) {
  WfcInput in;
  in.category = fincat_from_json(j);
  in.w = class_from_json(in.category, field(j, "weak_equivalences"));
  in.fib = class_from_json(in.category, field(j, "fibrations"));
  return in;
}

Json wfc_to_json(const FinCategory& c, const MorphismClass& w, const MorphismClass& fib) {
  Json j = fincat_to_json(c);
  auto names = [&](const MorphismClass& m) {
    std::vector<std::string> out;
    for (int f = 0; f < c.num_morphisms(); ++f)
      if (m[f]) out.push_back(c.morphisms[f]);
    return out;
  };
  j["weak_equivalences"] = names(w);
  j["fibrations"] = names(fib);
  return j;
}

// ---------------------------------------------------------------------------
// posets

Json poset_to_json(const FinPoset& p) {
  Json j;
  j["elements"] = p.elements;
  Json le = Json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) le.push_back({p.elements[a], p.elements[b]});
  j["leq"] = le;
  return j;
}

FinPoset poset_from_json(const Json& j) {
  auto elems = get<std::vector<std::string>>(j, "elements");
  std::vector<std::pair<int, int>> pairs;
  auto index = [&](const Json& e) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (e == elems[i]) return static_cast<int>(i);
    throw SchemaError("unknown poset element " + e.dump());
  };
  if (j.contains("leq"))
    for (const auto& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2) throw SchemaError("leq entries are [a, b]");
      pairs.emplace_back(index(pr[0]), index(pr[1]));
    }
  FinPoset p = FinPoset::from_relation(std::move(elems), pairs);
  try {
    p.validate();
  } catch (const InvariantViolation& e) {
    throw SchemaError(e.what());
  }
  return p;
}

EffPoset effposet_from_spec(const std::string& spec) {
  const std::string prefix = "finite:";
  if (spec.rfind(prefix, 0) == 0) {
    Json j;
    try {
      j = Json::parse(spec.substr(prefix.size()));
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("finite poset: ") + e.what());
    }
    return EffPoset::finite(poset_from_json(j));
  }
  try {
    return EffPoset::by_name(spec);
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

// ---------------------------------------------------------------------------
// sset.v1

Json sset_to_json(const TauSSet& x) {
  Json j;
  j["schema"] = "sset.v1";
  j["name"] = x.name();
  j["cosk_level"] = x.cosk_level();
  Json levels = Json::array();
  for (int k = 0; k <= x.stored_dim(); ++k) {
    Json l;
    l["simplices"] = x.count(k);
    Json faces = Json::array(), degens = Json::array();
    if (k > 0) {
      for (int s = 0; s < x.count(k); ++s) faces.push_back(x.boundary(k, s));
      for (int i = 0; i < k; ++i) {
        std::vector<int> row;
        for (int y = 0; y < x.count(k - 1); ++y) row.push_back(x.s(k - 1, i, y));
        degens.push_back(row);
      }
    }
    l["faces"] = faces;
    l["degeneracies"] = degens;
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j;
}

TauSSet sset_from_json(const Json& j) {
  expect_schema(j, "sset.v1");
  if (j.contains("builder")) {
    const auto label = get<std::string>(j, "builder");
    try {
      return KNilBasis::kpi().element(label).renamed(label);
    } catch (const PreconditionError& e) {
      throw SchemaError(e.what());
    }
  }
  const int n = get<int>(j, "cosk_level");
  Truncated t;
  const auto& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) throw SchemaError("levels must be a nonempty array");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    Level l;
    l.count = get<int>(levels[k], "simplices");
    if (l.count < 0) throw SchemaError("negative simplex count");
    if (k > 0) {
      const auto& faces = field(levels[k], "faces");
      const auto& degens = field(levels[k], "degeneracies");
      if (static_cast<int>(faces.size()) != l.count) throw SchemaError("level " + std::to_string(k) + ": one face list per simplex");
      for (const auto& f : faces) {
        if (f.size() != k + 1) throw SchemaError("level " + std::to_string(k) + ": face lists have k+1 entries");
        for (const auto& v : f) l.faces.push_back(v.get<int>());
      }
      if (degens.size() != k) throw SchemaError("level " + std::to_string(k) + ": k degeneracy rows");
      for (const auto& row : degens) {
        if (static_cast<int>(row.size()) != t[k - 1].count)
          throw SchemaError("level " + std::to_string(k) + ": degeneracy rows have |X_{k-1}| entries");
        for (const auto& v : row) l.degens.push_back(v.get<int>());
      }
      for (int v : l.faces)
        if (v < 0 || v >= t[k - 1].count) throw SchemaError("level " + std::to_string(k) + ": face id out of range");
      for (int v : l.degens)
        if (v < 0 || v >= l.count) throw SchemaError("level " + std::to_string(k) + ": degeneracy id out of range");
    }
    t.push_back(std::move(l));
  }
  return TauSSet(std::move(t), n, j.value("name", std::string{}));
}

std::string sset_hash(const TauSSet& x) {
  Json j = sset_to_json(x);
  j.erase("name");
  return hash_hex(canonical(j));
}

Json map_levels_to_json(const SimplicialMap& f) {
  Json levels = Json::array();
  for (int k = 0; k <= f.defined_dim(); ++k) levels.push_back(f.level(k));
  return levels;
}

SimplicialMap map_from_json(const Json& j, const TauSSet& source, const TauSSet& target) {
  std::vector<std::vector<int>> lv;
  try {
    lv = field(j, "levels").get<std::vector<std::vector<int>>>();
  } catch (const Json::type_error&) {
    throw SchemaError("map levels must be arrays of ids");
  }
  return SimplicialMap(source, target, std::move(lv));
}

// ---------------------------------------------------------------------------
// knil.v1

namespace {

const char* kind_name(KNilKind k) {
  switch (k) {
    case KNilKind::Leaf:
      return "leaf";
    case KNilKind::Point:
      return "point";
    case KNilKind::Pullback:
      return "pullback";
    case KNilKind::Iso:
      return "iso";
    case KNilKind::WeakEquivalence:
      return "weak-equivalence";
    case KNilKind::Retract:
      return "retract";
  }
  return "?";
}

KNilKind kind_from(const std::string& s) {
  for (KNilKind k : {KNilKind::Leaf, KNilKind::Point, KNilKind::Pullback, KNilKind::Iso, KNilKind::WeakEquivalence,
                     KNilKind::Retract})
    if (s == kind_name(k)) return k;
  throw SchemaError("unknown node kind " + s);
}

}  // namespace

Json knil_to_json(const KNilCertificate& c, const std::string& basis) {
  Json j;
  j["schema"] = "knil.v1";
  if (!basis.empty()) j["basis"] = basis;
  Json objects = Json::object(), maps = Json::object();
  std::map<std::string, std::string> by_hash;
  auto object_id = [&](const TauSSet& x) {
    const std::string h = sset_hash(x);
    auto it = by_hash.find(h);
    if (it != by_hash.end()) return it->second;
    const std::string id = "s" + std::to_string(by_hash.size());
    by_hash.emplace(h, id);
    objects[id] = sset_to_json(x);
    return id;
  };
  int next_map = 0;
  auto map_id = [&](const SimplicialMap& f) {
    const std::string id = "m" + std::to_string(next_map++);
    maps[id] = {{"source", object_id(f.source())}, {"target", object_id(f.target())}, {"levels", map_levels_to_json(f)}};
    return id;
  };
  std::vector<int> parent(c.nodes.size(), -1);
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (int ch : c.nodes[i].children) parent[ch] = static_cast<int>(i);
  // children are recovered in node order, so emit a preorder
  std::vector<int> order;
  std::function<void(int)> visit = [&](int i) {
    order.push_back(i);
    for (int ch : c.nodes[i].children) visit(ch);
  };
  visit(c.root);
  Json nodes = Json::array();
  for (int i : order) {
    const KNilNode& n = c.nodes[i];
    Json nd{{"id", n.id}, {"kind", kind_name(n.kind)}, {"object", object_id(n.object)}};
    nd["parent"] = parent[i] < 0 ? Json(nullptr) : Json(c.nodes[parent[i]].id);
    if (!n.label.empty()) nd["label"] = n.label;
    auto opt = [&](const char* key, const std::optional<SimplicialMap>& m) {
      if (m) nd[key] = map_id(*m);
    };
    opt("iso", n.iso);
    opt("leg_x", n.leg_x);
    opt("leg_y", n.leg_y);
    opt("pr_x", n.pr_x);
    opt("pr_y", n.pr_y);
    opt("section", n.section);
    opt("retraction", n.retraction);
    if (n.kind == KNilKind::Pullback) nd["marked"] = n.marked;
    if (n.kind == KNilKind::WeakEquivalence) {
      nd["we_method"] = n.we_method == WeMethod::MinimalIso ? "minimal-iso" : "homotopy-groups";
      nd["we_bound"] = n.we_bound;
    }
    nodes.push_back(nd);
  }
  j["objects"] = objects;
  j["maps"] = maps;
  j["nodes"] = nodes;
  return j;
}

KNilCertificate knil_from_json(const Json& j) {
  expect_schema(j, "knil.v1");
  std::map<std::string, TauSSet> objects;
  for (const auto& [id, o] : field(j, "objects").items()) objects.emplace(id, sset_from_json(o));
  auto object = [&](const std::string& id) -> const TauSSet& {
    auto it = objects.find(id);
    if (it == objects.end()) throw SchemaError("unknown object id " + id);
    return it->second;
  };
  const Json maps = j.value("maps", Json::object());
  auto map = [&](const std::string& id) {
    if (!maps.contains(id)) throw SchemaError("unknown map id " + id);
    const Json& m = maps[id];
    return map_from_json(m, object(get<std::string>(m, "source")), object(get<std::string>(m, "target")));
  };
  KNilCertificate c;
  std::vector<std::string> parents;
  for (const auto& nd : field(j, "nodes")) {
    KNilNode n;
    n.id = get<std::string>(nd, "id");
    n.kind = kind_from(get<std::string>(nd, "kind"));
    n.object = object(get<std::string>(nd, "object"));
    n.label = nd.value("label", std::string{});
    auto opt = [&](const char* key, std::optional<SimplicialMap>& slot) {
      if (nd.contains(key)) slot = map(nd[key].get<std::string>());
    };
    opt("iso", n.iso);
    opt("leg_x", n.leg_x);
    opt("leg_y", n.leg_y);
    opt("pr_x", n.pr_x);
    opt("pr_y", n.pr_y);
    opt("section", n.section);
    opt("retraction", n.retraction);
    n.marked = nd.value("marked", 1);
    const std::string method = nd.value("we_method", std::string("minimal-iso"));
    if (method != "minimal-iso" && method != "homotopy-groups") throw SchemaError("unknown we_method " + method);
    n.we_method = method == "minimal-iso" ? WeMethod::MinimalIso : WeMethod::HomotopyGroups;
    n.we_bound = nd.value("we_bound", 3);
    parents.push_back(nd.contains("parent") && !nd["parent"].is_null() ? nd["parent"].get<std::string>() : "");
    c.nodes.push_back(std::move(n));
  }
  int roots = 0;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (parents[i].empty()) {
      c.root = static_cast<int>(i);
      ++roots;
      continue;
    }
    int p = -1;
    for (std::size_t q = 0; q < c.nodes.size(); ++q)
      if (c.nodes[q].id == parents[i]) p = static_cast<int>(q);
    if (p < 0) throw SchemaError("unknown parent " + parents[i]);
    c.nodes[p].children.push_back(static_cast<int>(i));
  }
  if (roots != 1) throw SchemaError("certificate needs exactly one root");
  return c;
}

// ---------------------------------------------------------------------------
// pro.v1

ProInput pro_from_json(const Json& j) {
  expect_schema(j, "pro.v1");
  ProInput in;
  in.depth = get<Elem>(j, "depth");
  if (in.depth < 1) throw SchemaError("depth must be positive");
  const EffPoset index = effposet_from_spec(get<std::string>(j, "index"));
  if (j.contains("family")) {
    const auto fam = get<std::string>(j, "family");
    if (fam != "B(Z/n)" || index.name != "divisibility") throw SchemaError("supported family: B(Z/n) over divisibility");
    in.object = classifying_tower();
    in.object.validate(in.depth);
    return in;
  }
  const auto frag = index.fragment(in.depth);
  std::map<std::string, Elem> by_label;
  for (Elem e : frag) by_label.emplace(index.label(e), e);
  auto elem = [&](const std::string& l) {
    auto it = by_label.find(l);
    if (it == by_label.end()) throw SchemaError("element " + l + " is not in the fragment");
    return it->second;
  };
  auto values = std::make_shared<std::map<Elem, TauSSet>>();
  for (const auto& [l, v] : field(j, "values").items()) values->emplace(elem(l), sset_from_json(v));
  for (Elem e : frag)
    if (!values->count(e)) throw SchemaError("no value at " + index.label(e));
  auto given = std::make_shared<std::map<std::pair<Elem, Elem>, SimplicialMap>>();
  for (const auto& t : field(j, "transitions")) {
    const Elem a = elem(get<std::string>(t, "from")), b = elem(get<std::string>(t, "to"));
    if (!index.leq(b, a)) throw SchemaError("transition must run from a larger element to a smaller one");
    given->emplace(std::make_pair(a, b), map_from_json(t, values->at(a), values->at(b)));
  }
  ProObject<KanBase> x;
  x.name = j.value("name", std::string("pro-object"));
  x.index = index;
  x.value = [values, index](Elem e) {
    auto it = values->find(e);
    if (it == values->end()) throw PreconditionError("no value beyond the supplied fragment at " + index.label(e));
    return it->second;
  };
  x.transition = [values, given, index](Elem a, Elem b) {
    std::function<std::optional<SimplicialMap>(Elem)> path = [&](Elem from) -> std::optional<SimplicialMap> {
      if (from == b) return SimplicialMap::identity(values->at(b));
      for (const auto& [key, m] : *given) {
        if (key.first != from || !index.leq(b, key.second)) continue;
        if (auto rest = path(key.second)) return SimplicialMap::compose(*rest, m);
      }
      return std::nullopt;
    };
    auto m = path(a);
    if (!m) throw SchemaError("no transition path from " + index.label(a) + " to " + index.label(b));
    return *m;
  };
  in.object = x.cached();
  in.object.validate(in.depth);
  return in;
}

// ---------------------------------------------------------------------------
// reports

void Report::add(const std::string& name, bool pass, Json detail) {
  verdicts.push_back({{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
}

bool Report::pass() const {
  if (budget_exceeded) return false;
  for (const auto& v : verdicts)
    if (!v["pass"].get<bool>()) return false;
  return true;
}

Json Report::to_json(const std::string& schema) const {
  Json j{{"schema", schema}, {"command", command}, {"params", params}, {"verdicts", verdicts},
         {"budget_exceeded", budget_exceeded}, {"pass", pass()}};
  if (!data.empty()) j["data"] = data;
  return j;
}

}  // namespace procat
