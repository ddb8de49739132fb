#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynmatch/forest.hpp"

namespace dynmatch::workload {

enum class Kind { Path, Star, Caterpillar, Random };

Kind kind_from_name(const std::string& name);  // ParseError on unknown
const char* kind_name(Kind k) noexcept;

/// Labeled tree from a Prüfer sequence over vertices 0..n-1, n = len + 2.
std::vector<std::pair<VertexId, VertexId>> prufer_decode(const std::vector<std::uint32_t>& seq);

/// Edge list of an n-vertex tree of the given shape; Random uses a uniform
/// Prüfer sequence drawn from the seed.
std::vector<std::pair<VertexId, VertexId>> make_tree_edges(Kind kind, std::uint32_t n,
                                                           std::uint64_t seed);

struct OpMix {
  std::uint32_t churn = 0;    // cut + relink pairs
  std::uint32_t cards = 0;    // card queries
  std::uint32_t matched = 0;  // matched queries
};

/// Deterministic command script: links building the tree, then the requested
/// operation mix. Cuts target existing edges; links reconnect the two sides
/// that the preceding cut separated.
std::string gen_workload(Kind kind, std::uint32_t n, std::uint64_t seed, const OpMix& mix = {});

struct BenchRecord {
  std::string kind;
  std::uint32_t n = 0;
  std::string op;
  std::uint64_t count = 0;
  std::uint64_t total_ns = 0;
  double ns_per_op = 0.0;
  double touched_per_op = 0.0;
  std::uint32_t levels = 0;
};

/// One record per (kind, size, op) with op in {build, update, card}. Update
/// batches are cut/relink pairs of at least 10^4 operations; card latency is
/// measured over a fixed rotating probe set.
std::vector<BenchRecord> bench(const std::vector<Kind>& kinds,
                               const std::vector<std::uint32_t>& sizes, std::uint64_t seed);

std::string bench_csv(const std::vector<BenchRecord>& records);

struct FuzzOptions {
  std::uint32_t n = 512;
  std::uint64_t ops = 100000;
  std::uint64_t seed = 1;
  bool weighted = false;
  std::uint32_t audit_every = 16;     // cardinality vs the reference oracle
  std::uint32_t rebuild_every = 1000; // invariants plus from-scratch comparison
  std::uint64_t touched_budget = 0;   // 0 derives 64*(log2 n + 1)
};

struct FuzzReport {
  std::uint64_t ops_done = 0;
  std::uint64_t audits = 0;
  std::uint64_t rebuild_audits = 0;
  std::uint64_t max_touched = 0;
  std::string failure;  // empty when everything agreed

  bool ok() const { return failure.empty(); }
};

/// Random link/cut stream over a fixed vertex universe with periodic oracle,
/// invariant, and rebuild-equivalence audits.
FuzzReport fuzz_run(const FuzzOptions& opt);

}  // namespace dynmatch::workload
