#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "procat/eilmac.hpp"
#include "procat/examples.hpp"
#include "procat/homotopy.hpp"
#include "procat/io.hpp"
#include "procat/reports.hpp"
#include "procat/workspace.hpp"

using namespace procat;

namespace {

struct Options {
  std::string kind, name, out, basis, config, base = "finset", primes = "2,3,5";
  std::vector<std::string> refs;
  Elem depth = 20;
  long long budget = 0;
  std::uint64_t seed = 7;
  int random = 100;
};

std::vector<long long> parse_primes(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw SchemaError("bad prime list " + s);
    }
  }
  return out;
}

// {"max_simplices_per_level", "max_search_nodes", "max_solutions"}; missing
// keys keep the defaults.
void load_config(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object()) throw SchemaError(path + ": config must be an object");
  Budget& b = global_budget();
  for (auto& [key, field] : {std::pair{"max_simplices_per_level", &b.max_simplices_per_level},
                             std::pair{"max_search_nodes", &b.max_search_nodes},
                             std::pair{"max_solutions", &b.max_solutions}}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
      throw SchemaError(path + ": " + key + " must be a positive integer");
    *field = j[key].get<std::size_t>();
  }
  for (const auto& [key, v] : j.items())
    if (key != "max_simplices_per_level" && key != "max_search_nodes" && key != "max_solutions")
      throw SchemaError(path + ": unknown key " + key);
}

int emit(const Report& r, const Options& o, const std::string& schema = "report.v1") {
  Json j = r.to_json(schema);
  j["params"]["budget"] = global_budget().max_search_nodes;
  if (schema == "profinite.v1") {
    for (auto& [k, v] : r.data.items()) j[k] = v;
    j.erase("data");
  }
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << j.dump(2) << "\n";
    for (const auto& v : r.verdicts)
      std::cout << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>() << "\n";
  }
  if (r.budget_exceeded) return 2;
  return r.pass() ? 0 : 1;
}

int cmd_build(const Options& o) {
  Workspace ws = Workspace::from_env();
  const Json j = read_json_file(o.refs.at(0));
  std::vector<std::string> lines;
  if (o.kind == "fincat") {
    const FinCategory c = fincat_from_json(j);
    lines.push_back(std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms");
  } else if (o.kind == "wfc") {
    const WfcInput in = wfc_from_json(j);
    lines.push_back(std::to_string(in.category.num_objects()) + " objects, " +
                    std::to_string(in.category.num_morphisms()) + " morphisms");
  } else if (o.kind == "sset") {
    const TauSSet x = sset_from_json(j);
    const bool kan = is_kan(x).kan;
    const bool minimal = kan && is_minimal(x).minimal;
    lines.push_back("levels " + describe_counts(x, x.stored_dim()) + ", cosk " + std::to_string(x.cosk_level()));
    lines.push_back(std::string("minimal Kan: ") + (minimal ? "yes" : "no"));
  } else if (o.kind == "pro") {
    const ProInput in = pro_from_json(j);
    lines.push_back("index " + in.object.index.name + ", validated to depth " + std::to_string(in.depth));
  } else if (o.kind == "knil") {
    const KNilCertificate c = knil_from_json(j);
    lines.push_back(std::to_string(c.nodes.size()) + " nodes, root " + c.nodes[c.root].id);
  } else {
    throw SchemaError("unknown kind " + o.kind + " (fincat, wfc, sset, pro, knil)");
  }
  std::cout << ws.put(o.kind, j) << "\n";
  for (const auto& l : lines) std::cout << l << "\n";
  return 0;
}

int cmd_check(const Options& o) {
  Workspace ws = Workspace::from_env();
  auto input = [&]() {
    if (o.refs.empty()) throw PreconditionError("check " + o.name + " needs an object id or file");
    return load_input(ws, o.refs[0]);
  };
  Report r;
  if (o.name == "wfc") {
    r = check_wfc(wfc_from_json(input()));
  } else if (o.name == "knil") {
    const Json j = input();
    const std::string basis = !o.basis.empty() ? o.basis : j.value("basis", std::string("Kpi"));
    r = check_knil(knil_from_json(j), basis);
  } else if (o.name == "sset") {
    r = check_sset(sset_from_json(input()));
  } else if (o.name == "special-implies-levelwise") {
    r = check_special_implies_levelwise(o.random, o.seed);
  } else if (o.name == "factorization") {
    r = check_factorization(o.base, o.random, o.seed);
  } else if (o.name == "cosk") {
    r = check_coskeleta();
  } else {
    throw PreconditionError("unknown check " + o.name +
                            " (wfc, knil, sset, special-implies-levelwise, factorization, cosk)");
  }
  r.params["depth"] = o.depth;
  return emit(r, o);
}

int cmd_example(const Options& o) { return emit(run_example(o.name, o.depth, parse_primes(o.primes)), o); }

int cmd_profinite(const Options& o) {
  if (o.name != "circle") throw PreconditionError("unknown profinite example " + o.name + " (circle)");
  Report r = example_circle(o.depth, parse_primes(o.primes));
  r.command = "profinite circle";
  return emit(r, o, "profinite.v1");
}

int cmd_export(const Options& o) {
  Json j;
  if (o.name == "bz2") {
    j = sset_to_json(b_group(FinGroup::cyclic(2)).renamed("B(Z/2)"));
  } else if (o.name == "lattice") {
    const auto f = wfc_fixtures().front();
    j = wfc_to_json(f.category, f.w, f.fib);
  } else if (o.name == "postnikov-z4-cert") {
    j = knil_to_json(postnikov_z4().certificate, "Kp:2");
  } else if (o.name == "bz-tower") {
    j = {{"schema", "pro.v1"}, {"name", "divisibility tower BZ/n"}, {"index", "divisibility"}, {"family", "B(Z/n)"},
         {"depth", 12}};
  } else {
    throw PreconditionError("unknown export " + o.name + " (bz2, lattice, postnikov-z4-cert, bz-tower)");
  }
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    f << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"procat: pro-categories, simplicial sets and profinite completions"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--depth", o.depth, "poset fragment depth")->capture_default_str();
    c->add_option("--budget", o.budget, "max search nodes per enumeration");
    c->add_option("--seed", o.seed, "seed for randomized harnesses")->capture_default_str();
    c->add_option("--out", o.out, "write the report here");
    c->add_option("--config", o.config, "budget config (JSON); defaults to $PROCAT_CONFIG");
  };
  auto* build = app.add_subcommand("build", "construct and store an object");
  build->add_option("kind", o.kind, "fincat, wfc, sset, pro or knil")->required();
  build->add_option("file", o.refs, "JSON file")->required();
  common(build);
  auto* check = app.add_subcommand("check", "run a check");
  check->add_option("name", o.name)->required();
  check->add_option("inputs", o.refs, "object ids or JSON files");
  check->add_option("--basis", o.basis, "Kpi, Kp:<prime> or an explicit list");
  check->add_option("--random", o.random, "number of random inputs")->capture_default_str();
  check->add_option("--base", o.base, "finset or kan")->capture_default_str();
  common(check);
  auto* example = app.add_subcommand("example", "run a bundled example");
  example->add_option("name", o.name)->required();
  example->add_option("--primes", o.primes)->capture_default_str();
  common(example);
  auto* profinite = app.add_subcommand("profinite", "profinite completion reports");
  profinite->add_option("name", o.name)->required();
  profinite->add_option("--primes", o.primes)->capture_default_str();
  common(profinite);

  auto* exp = app.add_subcommand("export", "write a bundled fixture as JSON");
  exp->add_option("name", o.name, "bz2, lattice, postnikov-z4-cert or bz-tower")->required();
  exp->add_option("--out", o.out, "output file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (o.config.empty())
      if (const char* env = std::getenv("PROCAT_CONFIG"); env && *env) o.config = env;
    if (!o.config.empty()) load_config(o.config);
    if (o.budget > 0) global_budget().max_search_nodes = static_cast<std::size_t>(o.budget);
    if (build->parsed()) return cmd_build(o);
    if (check->parsed()) return cmd_check(o);
    if (example->parsed()) return cmd_example(o);
    if (exp->parsed()) return cmd_export(o);
    return cmd_profinite(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "schema violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
