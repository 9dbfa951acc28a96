// switchscan: command-line front end.
//
// Every subcommand builds a JSON report, optionally writes it with --json FILE,
// and prints a short text summary of it. Exit status: 0 ok, 1 bad input,
// 2 refused by a budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "parallel.hpp"
#include "switchscan/autom.hpp"
#include "switchscan/catalog.hpp"
#include "switchscan/counting.hpp"
#include "switchscan/io.hpp"
#include "switchscan/report_json.hpp"
#include "switchscan/search.hpp"

using namespace switchscan;
using nlohmann::json;

namespace {

struct Common {
  std::size_t jobs = default_workers();
  std::string json_path;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--json", c.json_path, "write the JSON report to FILE ('-' for stdout)");
}

void emit(const Common& c, const json& report) {
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    std::cout << report.dump(2) << std::endl;
    // Keep stdout pure JSON; the human summary that follows goes to stderr.
    std::cout.rdbuf(std::cerr.rdbuf());
    return;
  }
  std::ofstream out(c.json_path);
  if (!out) throw DomainError("cannot write " + c.json_path);
  out << report.dump(2) << '\n';
}

NamedGroup resolve_group(const std::string& arg) {
  if (arg.starts_with("@")) return {arg, load_group(arg.substr(1))};
  return {arg, catalog_group(arg)};
}

ScanOptions scan_options(const Common& c, ScanMode mode) {
  ScanOptions o;
  o.mode = mode;
  o.executor = thread_executor(c.jobs);
  o.shards = c.jobs <= 1 ? 1 : c.jobs * 16;
  return o;
}

std::string point_list(const json& pts) {
  if (pts.is_null()) return "-";
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i].get<int>());
  return s + "}";
}

void print_classification(const json& r) {
  const auto& g = r["group"];
  std::cout << g["name"].get<std::string>() << ": degree " << g["degree"] << ", order " << g["order"];
  if (g.contains("primitive") && !g["primitive"].get<bool>()) std::cout << " (not primitive)";
  std::cout << '\n';
  if (r.contains("error")) {
    std::cout << "  error: " << r["error"].get<std::string>() << '\n';
    return;
  }
  int not_two_graph = 0, not_full = 0;
  for (const auto& c : r["candidates"]) {
    const auto status = c["status"].get<std::string>();
    if (status == "discarded_not_two_graph") {
      ++not_two_graph;
    } else if (status == "discarded_not_full_group") {
      ++not_full;
    } else {
      std::cout << "  orbits " << point_list(c["orbits"]) << ", " << c["triples"] << " triples: " << status;
      if (status == "witness_found") std::cout << ", X = " << point_list(c["witness"]);
      std::cout << ", scanned " << c["scanned"] << '\n';
    }
  }
  std::cout << "  discarded: " << not_two_graph << " not two-graphs, " << not_full << " with a larger group\n";
}

int run_classify(const Common& c, const std::string& group, bool exhaustive) {
  const auto g = resolve_group(group);
  const auto report = to_json(classify_group(g.name, g.group, scan_options(c, exhaustive ? ScanMode::exhaustive : ScanMode::fast)));
  emit(c, report);
  print_classification(report);
  return 0;
}

int run_exceptions(const Common& c, int max_degree) {
  std::vector<NamedGroup> groups;
  for (const auto& info : catalog_groups())
    if (info.degree <= max_degree) groups.push_back({info.name, catalog_group(info.name)});
  const auto reports = exception_scan(groups, scan_options(c, ScanMode::exhaustive));
  json out = {{"max_degree", max_degree}, {"reports", json::array()}, {"exceptions", json::array()}};
  for (const auto& r : reports) {
    out["reports"].push_back(to_json(r));
    for (const auto* e : r.with_status(CandidateStatus::exception)) {
      auto orbits = json::array();
      for (auto o : e->orbits) orbits.push_back(o + 1);
      out["exceptions"].push_back({{"group", r.group_name},
                                   {"degree", r.degree},
                                   {"order", r.group_order.str()},
                                   {"orbits", orbits},
                                   {"triples", e->triples.count()},
                                   {"scanned", e->scanned}});
    }
  }
  emit(c, out);
  for (const auto& r : out["reports"])
    if (r.contains("error")) std::cout << r["group"]["name"].get<std::string>() << ": " << r["error"].get<std::string>() << '\n';
  for (const auto& e : out["exceptions"])
    std::cout << "exception: degree " << e["degree"] << ", group " << e["group"].get<std::string>() << " of order "
              << e["order"].get<std::string>() << ", " << e["triples"] << " triples, all " << e["scanned"]
              << " graphs scanned\n";
  std::cout << out["exceptions"].size() << " exceptional switching classes among " << groups.size()
            << " groups of degree <= " << max_degree << '\n';
  return 0;
}

json group_generators(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_cycle_string(p));
  return gens;
}

int run_aut(const Common& c, const std::string& graph_file, const std::string& two_graph_file) {
  if (graph_file.empty() == two_graph_file.empty()) throw DomainError("aut needs exactly one of --graph, --two-graph");
  const PermGroup g = graph_file.empty() ? hypergraph_aut(load_two_graph(two_graph_file)) : graph_aut(load_graph(graph_file));
  const json out = {{"degree", g.degree()}, {"order", g.order().str()}, {"generators", group_generators(g)}};
  emit(c, out);
  std::cout << "order " << out["order"].get<std::string>() << '\n';
  for (const auto& s : out["generators"]) std::cout << "  " << s.get<std::string>() << '\n';
  return 0;
}

int run_scan(const Common& c, const std::string& file, bool fast) {
  const TwoGraph t = load_two_graph(file);
  const auto r = find_trivial_graph(t, scan_options(c, fast ? ScanMode::fast : ScanMode::exhaustive));
  const json out = to_json(r, t.n());
  emit(c, out);
  std::cout << out["status"].get<std::string>();
  if (r.witness) std::cout << ", X = " << point_list(out["witness"]);
  std::cout << ", scanned " << r.scanned << '\n';
  return 0;
}

int run_type(const Common& c, const std::string& file) {
  const auto t = classify_type(load_two_graph(file));
  const json out = to_json(t);
  emit(c, out);
  std::cout << "Type " << out["type"].get<std::string>() << ", class group order " << out["class_aut_order"].get<std::string>() << '\n';
  return 0;
}

int run_counts(const Common& c, const std::string& group) {
  const auto g = resolve_group(group);
  const auto orbits = orbit_report(g.group);
  const auto type2 = type2_inequality(g.group);
  const auto [product, power] = maroti_bound(g.group.degree());
  const json out = {{"group", group_json(g.name, g.group)},
                    {"orbits", to_json(orbits)},
                    {"orbits_on_all_switching_classes", orbits_on_all_switching_classes(g.group).str()},
                    {"type2_inequality", to_json(type2)},
                    {"maroti_bound", {{"product", product.str()}, {"power", power.str()}}}};
  emit(c, out);
  std::cout << g.name << ": order " << orbits.group_order << '\n'
            << "  orbits on subsets            " << orbits.orbits_on_powerset << '\n'
            << "  orbits on W                  " << orbits.orbits_on_module_W << '\n'
            << "  self-complementary orbits    " << orbits.self_complementary_orbits << '\n'
            << "  orbits on switching classes  " << out["orbits_on_all_switching_classes"].get<std::string>() << '\n'
            << "  no-regular-orbit inequality " << (type2.holds ? "holds" : "fails") << ": " << out["type2_inequality"]["lhs"].get<std::string>()
            << " vs " << out["type2_inequality"]["rhs"].get<std::string>() << '\n'
            << "  Maroti bound                 " << product << " < " << power << '\n';
  return 0;
}

int run_regular_orbit(const Common& c, const std::string& group, int max_size) {
  const auto g = resolve_group(group);
  const auto x = regular_subset_orbit(g.group, max_size);
  const json out = {{"group", group_json(g.name, g.group)},
                    {"max_size", max_size},
                    {"subset", x ? points_json(*x) : json(nullptr)},
                    {"size", x ? json(popcount(*x)) : json(nullptr)}};
  emit(c, out);
  if (x)
    std::cout << "regular subset " << point_list(out["subset"]) << " of size " << popcount(*x) << '\n';
  else
    std::cout << "no subset with trivial stabiliser\n";
  return 0;
}

int run_catalog(const Common& c) {
  json groups = json::array(), two_graphs = json::array();
  for (const auto& info : catalog_groups()) {
    const auto g = catalog_group(info.name);
    groups.push_back({{"name", info.name}, {"degree", info.degree}, {"order", g.order().str()}, {"description", info.description}});
    std::cout << info.name << "  degree " << info.degree << "  order " << g.order() << "  " << info.description << '\n';
  }
  for (const auto& info : catalog_two_graphs()) {
    const auto t = catalog_two_graph(info.name);
    const auto order = hypergraph_aut(t).order();
    two_graphs.push_back({{"name", info.name}, {"degree", info.degree}, {"triples", t.count()}, {"aut_order", order.str()},
                          {"description", info.description}});
    std::cout << info.name << "  degree " << info.degree << "  aut order " << order << "  " << info.description << '\n';
  }
  emit(c, {{"groups", groups}, {"two_graphs", two_graphs}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switching classes, two-graphs and their automorphism groups"};
  app.require_subcommand(1);
  Common common;

  std::string group, graph_file, two_graph_file;
  bool exhaustive = false, deterministic = false, fast = false;
  int max_degree = 16, max_size = kMaxDegree;

  auto* classify = app.add_subcommand("classify", "two-graphs with full group G and their class scans");
  classify->add_option("--group", group, "catalog name or @file")->required();
  classify->add_flag("--exhaustive", exhaustive, "report the earliest witness in scan order");
  classify->add_flag("--deterministic", deterministic, "same as --exhaustive");
  add_common(classify, common);

  auto* exceptions = app.add_subcommand("exceptions", "classify every catalog group up to a degree");
  exceptions->add_option("--max-degree", max_degree)->capture_default_str();
  add_common(exceptions, common);

  auto* aut = app.add_subcommand("aut", "automorphism group of a graph or two-graph");
  aut->add_option("--graph", graph_file);
  aut->add_option("--two-graph", two_graph_file);
  add_common(aut, common);

  auto* scan = app.add_subcommand("scan", "look for a trivial-group graph in a switching class");
  scan->add_option("--two-graph", two_graph_file)->required();
  scan->add_flag("--fast", fast, "stop at the first witness found by any worker");
  add_common(scan, common);

  auto* type = app.add_subcommand("type", "Type I or Type II");
  type->add_option("--two-graph", two_graph_file)->required();
  add_common(type, common);

  auto* counts = app.add_subcommand("counts", "orbit counts and group-order bounds");
  counts->add_option("--group", group)->required();
  add_common(counts, common);

  auto* regular = app.add_subcommand("regular-orbit", "subset with trivial setwise stabiliser");
  regular->add_option("--group", group)->required();
  regular->add_option("--max-size", max_size, "only subsets of at most this size");
  add_common(regular, common);

  auto* catalog = app.add_subcommand("catalog", "built-in groups and two-graphs");
  catalog->add_subcommand("list", "list them")->final_callback([] {});
  catalog->require_subcommand(1);
  add_common(catalog, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify->parsed()) return run_classify(common, group, exhaustive || deterministic);
    if (exceptions->parsed()) return run_exceptions(common, max_degree);
    if (aut->parsed()) return run_aut(common, graph_file, two_graph_file);
    if (scan->parsed()) return run_scan(common, two_graph_file, fast);
    if (type->parsed()) return run_type(common, two_graph_file);
    if (counts->parsed()) return run_counts(common, group);
    if (regular->parsed()) return run_regular_orbit(common, group, max_size);
    if (catalog->parsed()) return run_catalog(common);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
