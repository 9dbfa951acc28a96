#include "switchscan/report_json.hpp"

#include <sstream>

#include "switchscan/io.hpp"

namespace switchscan {

namespace {

std::string decimal(const BigInt& v) { return v.str(); }

// Plain integer when exactly representable, decimal string otherwise.
nlohmann::json count_json(const BigInt& v) {
  if (v >= 0 && v < (BigInt(1) << 53)) return v.convert_to<std::uint64_t>();
  return decimal(v);
}

std::string rational(const BigRational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

}  // namespace

nlohmann::json points_json(Mask set) {
  auto pts = nlohmann::json::array();
  for (int p : mask_to_points(set)) pts.push_back(p + 1);
  return pts;
}

nlohmann::json group_json(const std::string& name, const PermGroup& g) {
  return {{"name", name}, {"degree", g.degree()}, {"order", count_json(g.order())}};
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json group = {{"name", r.group_name}, {"degree", r.degree}, {"order", count_json(r.group_order)}};
  if (r.error.empty()) group["primitive"] = r.primitive;
  auto candidates = nlohmann::json::array();
  for (const auto& c : r.candidates) {
    auto orbits = nlohmann::json::array();
    for (auto o : c.orbits) orbits.push_back(o + 1);
    candidates.push_back({{"orbits", orbits},
                          {"triples", c.triples.count()},
                          {"aut_order", c.aut_order ? decimal(*c.aut_order) : std::string()},
                          {"status", to_string(c.status)},
                          {"witness", c.witness ? points_json(*c.witness) : nlohmann::json(nullptr)},
                          {"scanned", c.scanned}});
  }
  nlohmann::json out = {{"group", group}, {"candidates", candidates}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

nlohmann::json to_json(const OrbitCountReport& r) {
  return {{"group_order", count_json(r.group_order)},
          {"orbits_on_powerset", count_json(r.orbits_on_powerset)},
          {"orbits_on_module_W", count_json(r.orbits_on_module_W)},
          {"self_complementary_orbits", count_json(r.self_complementary_orbits)}};
}

nlohmann::json to_json(const Type2Report& r) {
  return {{"lhs", rational(r.lhs)},
          {"rhs", rational(r.rhs)},
          {"holds", r.holds},
          {"relaxed_lhs_log2", r.relaxed_lhs_log2},
          {"relaxed_rhs_log2", r.relaxed_rhs_log2},
          {"relaxed_holds", r.relaxed_holds}};
}

nlohmann::json to_json(const ScanResult& r, int degree) {
  return {{"degree", degree},
          {"status", r.witness ? "witness_found" : "exception"},
          {"witness", r.witness ? points_json(*r.witness) : nlohmann::json(nullptr)},
          {"position", r.position},
          {"scanned", r.scanned}};
}

nlohmann::json to_json(const SwitchingType& t) {
  nlohmann::json out = {{"type", t.type_one ? "I" : "II"}, {"class_aut_order", decimal(t.class_group_order)}};
  if (t.witness) {
    std::ostringstream graph;
    write_graph(graph, *t.witness);
    out["witness_graph"] = graph.str();
  } else {
    out["witness_graph"] = nullptr;
  }
  return out;
}

}  // namespace switchscan
