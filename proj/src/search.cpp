#include "switchscan/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "switchscan/autom.hpp"

namespace switchscan {

namespace {

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

ScanResult find_trivial_graph(const TwoGraph& t, const ScanOptions& opts) {
  const Graph rep = isolated_vertex_representative(t);
  const std::uint64_t total = class_size(t.n());
  const std::uint64_t shards = std::clamp<std::uint64_t>(opts.shards, 1, total);
  const std::uint64_t chunk = (total + shards - 1) / shards;

  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> scanned{0};
  std::atomic<bool> found{false};

  opts.executor(static_cast<std::size_t>(shards), [&](std::size_t s) {
    const std::uint64_t begin = s * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) return;
    std::uint64_t local = 0;
    for (SwitchingClassCursor c(rep, begin, end); !c.done(); c.advance()) {
      if (opts.mode == ScanMode::fast ? found.load(std::memory_order_relaxed) : c.index() >= best.load()) break;
      ++local;
      if (has_trivial_aut(c.graph())) {
        atomic_min(best, c.index());
        found = true;
        break;
      }
    }
    scanned += local;
  });

  ScanResult r;
  if (best.load() < total) {
    r.position = best.load();
    r.witness = gray_set(r.position);
    r.scanned = opts.mode == ScanMode::exhaustive ? r.position + 1 : scanned.load();
  } else {
    r.scanned = total;
  }
  return r;
}

const char* to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::witness_found: return "witness_found";
    case CandidateStatus::exception: return "exception";
    case CandidateStatus::discarded_not_full_group: return "discarded_not_full_group";
    case CandidateStatus::discarded_not_two_graph: return "discarded_not_two_graph";
  }
  return "?";
}

std::vector<const Candidate*> ClassificationReport::with_status(CandidateStatus s) const {
  std::vector<const Candidate*> out;
  for (const auto& c : candidates)
    if (c.status == s) out.push_back(&c);
  return out;
}

ClassificationReport classify_group(const std::string& name, const PermGroup& g, const ScanOptions& opts,
                                    std::size_t max_triple_orbits) {
  ClassificationReport report;
  report.group_name = name;
  report.degree = g.degree();
  report.group_order = g.order();
  const auto prim = g.primitivity();
  if (!prim.transitive) throw DomainError("classify_group: " + name + " is not transitive");
  report.primitive = prim.primitive;

  const TripleOrbits orbits = g.orbits_on_triples();
  if (orbits.size() > max_triple_orbits)
    throw BudgetExceeded("classify_group: " + std::to_string(orbits.size()) + " orbits on triples exceeds the cap of " +
                         std::to_string(max_triple_orbits));
  if (orbits.size() < 2) return report;

  // The last orbit is never selected: each complementary pair appears once.
  const std::size_t choices = orbits.size() - 1;
  for (std::uint64_t selector = 1; selector < (std::uint64_t{1} << choices); ++selector) {
    Candidate c;
    for (std::size_t i = 0; i < choices; ++i)
      if ((selector >> i) & 1U) c.orbits.push_back(i);
    c.triples = from_orbit_union(orbits, c.orbits);
    if (!is_two_graph(c.triples, true)) {
      report.candidates.push_back(std::move(c));
      continue;
    }
    c.aut_order = hypergraph_aut(c.triples).order();
    if (*c.aut_order != report.group_order) {
      c.status = CandidateStatus::discarded_not_full_group;
      report.candidates.push_back(std::move(c));
      continue;
    }
    const TwoGraph t(c.triples);
    const ScanResult scan = find_trivial_graph(t, opts);
    c.scanned = scan.scanned;
    if (scan.witness) {
      const Graph w = switch_set(isolated_vertex_representative(t), *scan.witness);
      if (graph_aut(w).order() != 1) throw std::logic_error("witness failed revalidation");
      c.status = CandidateStatus::witness_found;
      c.witness = scan.witness;
    } else {
      c.status = CandidateStatus::exception;
    }
    report.candidates.push_back(std::move(c));
  }
  return report;
}

std::vector<ClassificationReport> exception_scan(const std::vector<NamedGroup>& groups, const ScanOptions& opts) {
  std::vector<ClassificationReport> out;
  for (const auto& [name, group] : groups) {
    try {
      out.push_back(classify_group(name, group, opts));
    } catch (const std::exception& e) {
      ClassificationReport failed;
      failed.group_name = name;
      failed.degree = group.degree();
      failed.group_order = group.order();
      failed.error = e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

SwitchingType classify_type(const TwoGraph& t) {
  const PermGroup aut = hypergraph_aut(t);
  SwitchingType result;
  result.class_group_order = aut.order();
  auto realizes = [&](const Graph& g) {
    return std::all_of(aut.generators().begin(), aut.generators().end(),
                       [&](const Permutation& p) { return is_automorphism(g, p); });
  };
  const Graph rep = isolated_vertex_representative(t);
  if (t.n() % 2 == 1) {
    // The even-valency member is unique, hence fixed by the whole class group.
    const Graph even = even_valency_representative(rep);
    if (realizes(even)) {
      result.type_one = true;
      result.witness = even;
      return result;
    }
  }
  for (SwitchingClassCursor c(rep); !c.done(); c.advance()) {
    if (realizes(c.graph())) {
      result.type_one = true;
      result.witness = c.graph();
      return result;
    }
  }
  return result;
}

}  // namespace switchscan
