#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "procat/fincat.hpp"
#include "procat/knil.hpp"
#include "procat/poset.hpp"
#include "procat/proeng.hpp"
#include "procat/wfc.hpp"

namespace procat {

using Json = nlohmann::json;

/// Input that does not match the schema for its kind.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path);
/// Requires j["schema"] == schema.
void expect_schema(const Json& j, const std::string& schema);

// fincat.v1: {"objects": [...], "morphisms": [{"id", "dom", "cod",
// "identity"?}], "composition": [[g, f, gf], ...]}. Identities not listed
// are added as "id_<object>"; composites with identities may be omitted.
Json fincat_to_json(const FinCategory& c);
FinCategory fincat_from_json(const Json& j);

/// A category with W and Fib ("isos", "all" or a list of morphism ids)
/// under "weak_equivalences" and "fibrations".
struct WfcInput {
  FinCategory category;
  MorphismClass w, fib;
};
WfcInput wfc_from_json(const Json& j);
Json wfc_to_json(const FinCategory& c, const MorphismClass& w, const MorphismClass& fib);

// Posets: {"elements": [...], "leq": [[a, b], ...]} with a <= b generating.
Json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);
/// EffPoset::by_name plus "finite:<poset json>".
EffPoset effposet_from_spec(const std::string& spec);

// sset.v1: {"name", "cosk_level", "levels": [{"simplices", "faces": [[..]
// per simplex], "degeneracies": [[..] per i]}]} or {"builder": label} with
// the labels of KNilBasis::element.
Json sset_to_json(const TauSSet& x);
TauSSet sset_from_json(const Json& j);
std::string sset_hash(const TauSSet& x);
/// Map entry: {"source": id, "target": id, "levels": [[..], ..]}.
Json map_levels_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, const TauSSet& source, const TauSSet& target);

// knil.v1: {"basis"?, "objects": {id: sset}, "maps": {id: map}, "nodes":
// [{"id", "kind", "object", "parent", ...map references by id}]}. Children
// are the nodes naming a parent, in node order.
Json knil_to_json(const KNilCertificate& c, const std::string& basis = {});
KNilCertificate knil_from_json(const Json& j);

// pro.v1: {"index": builder, "depth", "family": "B(Z/n)"} or explicit
// {"values": {element: sset}, "transitions": [{"from", "to", "levels"}]}
// where transitions cover the covering pairs of the fragment.
struct ProInput {
  ProObject<KanBase> object;
  Elem depth = 0;
};
ProInput pro_from_json(const Json& j);

/// Canonical serialization used for hashing (sorted keys, no spaces).
std::string canonical(const Json& j);
std::string hash_hex(const std::string& s);

/// report.v1 skeleton: {"schema", "command", "params", "verdicts", "pass"}.
struct Report {
  std::string command;
  Json params = Json::object();
  Json verdicts = Json::array();
  Json data = Json::object();  // schema-specific body
  bool budget_exceeded = false;
  void add(const std::string& name, bool pass, Json detail = Json::object());
  bool pass() const;
  Json to_json(const std::string& schema = "report.v1") const;
};

}  // namespace procat
