#pragma once

// From a group to the two-graphs it can be the full automorphism group of,
// and for each of those a scan of the switching class for a graph with
// trivial automorphism group.

#include <optional>
#include <string>
#include <vector>

#include "switchscan/executor.hpp"
#include "switchscan/graph.hpp"
#include "switchscan/perm.hpp"
#include "switchscan/twograph.hpp"

namespace switchscan {

/// exhaustive: the witness is the earliest in scan order, whatever the
/// sharding. fast: shards stop as soon as any of them finds a witness.
/// Either way "no witness" is only reported after every member was tested.
enum class ScanMode { exhaustive, fast };

struct ScanOptions {
  ScanMode mode = ScanMode::exhaustive;
  Executor executor = serial_executor();
  std::size_t shards = 1;
};

struct ScanResult {
  std::optional<Mask> witness;  // switching set X, never containing n-1
  std::uint64_t position = 0;   // scan index of the witness
  std::uint64_t scanned = 0;    // exhaustive: position + 1, or the class size
};

/// Scans sigma_X(isolated_vertex_representative(t)) over X in {0..n-2}.
ScanResult find_trivial_graph(const TwoGraph& t, const ScanOptions& opts = {});

enum class CandidateStatus { witness_found, exception, discarded_not_full_group, discarded_not_two_graph };

const char* to_string(CandidateStatus s);

struct Candidate {
  std::vector<std::size_t> orbits;  // 0-based triple-orbit indices
  TripleSet triples;
  std::optional<BigInt> aut_order;  // absent when not a two-graph
  CandidateStatus status = CandidateStatus::discarded_not_two_graph;
  std::optional<Mask> witness;
  std::uint64_t scanned = 0;
};

struct ClassificationReport {
  std::string group_name;
  int degree = 0;
  BigInt group_order;
  bool primitive = false;
  std::vector<Candidate> candidates;
  std::string error;  // set when the group could not be processed

  std::vector<const Candidate*> with_status(CandidateStatus s) const;
};

/// Unions of triple orbits (never the last orbit, never empty) that are
/// two-graphs with full group G, each scanned for a trivial-group member.
/// Refuses (BudgetExceeded) when G has more than `max_triple_orbits` orbits.
ClassificationReport classify_group(const std::string& name, const PermGroup& g, const ScanOptions& opts = {},
                                    std::size_t max_triple_orbits = 20);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// classify_group over each group; a failing group yields a report with
/// `error` set and the scan continues.
std::vector<ClassificationReport> exception_scan(const std::vector<NamedGroup>& groups, const ScanOptions& opts = {});

/// Type I: some member graph has the whole class group as its group.
struct SwitchingType {
  bool type_one = false;
  std::optional<Graph> witness;
  BigInt class_group_order;
};

SwitchingType classify_type(const TwoGraph& t);

}  // namespace switchscan
