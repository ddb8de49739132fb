#include "dynmatch/workload.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <queue>
#include <random>
#include <sstream>

#include "dynmatch/errors.hpp"
#include "dynmatch/oracle.hpp"
#include "dynmatch/queries.hpp"
#include "dynmatch/top_forest.hpp"

namespace dynmatch::workload {

Kind kind_from_name(const std::string& name) {
  if (name == "path") return Kind::Path;
  if (name == "star") return Kind::Star;
  if (name == "caterpillar") return Kind::Caterpillar;
  if (name == "random") return Kind::Random;
  raise(Errc::ParseError, "unknown workload kind: " + name);
}

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Path: return "path";
    case Kind::Star: return "star";
    case Kind::Caterpillar: return "caterpillar";
    case Kind::Random: return "random";
  }
  return "?";
}

std::vector<std::pair<VertexId, VertexId>> prufer_decode(const std::vector<std::uint32_t>& seq) {
  const std::uint32_t n = static_cast<std::uint32_t>(seq.size()) + 2;
  std::vector<std::uint32_t> deg(n, 1);
  for (std::uint32_t v : seq) ++deg[v];
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> leaves;
  for (std::uint32_t v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (std::uint32_t v : seq) {
    std::uint32_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1) leaves.push(v);
  }
  std::uint32_t a = leaves.top();
  leaves.pop();
  std::uint32_t b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

std::vector<std::pair<VertexId, VertexId>> make_tree_edges(Kind kind, std::uint32_t n,
                                                           std::uint64_t seed) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return edges;
  switch (kind) {
    case Kind::Path:
      for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Kind::Star:
      for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Kind::Caterpillar: {
      // spine 0..s-1, remaining vertices hang off the spine round-robin
      std::uint32_t s = std::max<std::uint32_t>(1, n / 2);
      for (std::uint32_t i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
      for (std::uint32_t i = s; i < n; ++i) edges.emplace_back((i - s) % s, i);
      break;
    }
    case Kind::Random: {
      if (n == 2) {
        edges.emplace_back(0, 1);
        break;
      }
      std::mt19937_64 rng(seed);
      std::vector<std::uint32_t> seq(n - 2);
      for (auto& v : seq) v = static_cast<std::uint32_t>(rng() % n);
      edges = prufer_decode(seq);
      break;
    }
  }
  return edges;
}

namespace {

// Splits implied by removing `cut` from the tree: returns the side of `from`.
std::vector<std::uint32_t> side_of(const std::vector<std::vector<std::uint32_t>>& adj,
                                   std::uint32_t from, std::uint32_t avoid) {
  std::vector<std::uint32_t> side{from};
  std::vector<bool> seen(adj.size(), false);
  seen[from] = true;
  seen[avoid] = true;
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::uint32_t y : adj[side[i]]) {
      if (!seen[y]) {
        seen[y] = true;
        side.push_back(y);
      }
    }
  }
  return side;
}

}  // namespace

std::string gen_workload(Kind kind, std::uint32_t n, std::uint64_t seed, const OpMix& mix) {
  std::ostringstream out;
  auto edges = make_tree_edges(kind, n, seed);
  for (auto [u, v] : edges) out << "link " << u << " " << v << "\n";

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto rebuild_adj = [&]() {
    for (auto& a : adj) a.clear();
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  };

  for (std::uint32_t i = 0; i < mix.churn && !edges.empty(); ++i) {
    std::size_t pick = rng() % edges.size();
    auto [u, v] = edges[pick];
    out << "cut " << u << " " << v << "\n";
    // reconnect the two sides through a random cross pair
    auto su = side_of(adj, u, v);
    auto sv = side_of(adj, v, u);
    std::uint32_t x = su[rng() % su.size()];
    std::uint32_t y = sv[rng() % sv.size()];
    out << "link " << x << " " << y << "\n";
    edges[pick] = {x, y};
    rebuild_adj();
  }
  for (std::uint32_t i = 0; i < mix.cards; ++i) out << "card " << rng() % std::max(1u, n) << "\n";
  for (std::uint32_t i = 0; i < mix.matched && !edges.empty(); ++i) {
    auto [u, v] = edges[rng() % edges.size()];
    out << "matched " << u << " " << v << "\n";
  }
  return out.str();
}

std::vector<BenchRecord> bench(const std::vector<Kind>& kinds,
                               const std::vector<std::uint32_t>& sizes, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;

  for (Kind kind : kinds) {
    for (std::uint32_t n : sizes) {
      auto edges = make_tree_edges(kind, n, seed);
      TopForest tf;
      tf.ensure_vertices(n);

      auto record = [&](const std::string& op, std::uint64_t count, std::uint64_t ns,
                        std::uint64_t touched) {
        BenchRecord r;
        r.kind = kind_name(kind);
        r.n = n;
        r.op = op;
        r.count = count;
        r.total_ns = ns;
        r.ns_per_op = count ? static_cast<double>(ns) / static_cast<double>(count) : 0.0;
        r.touched_per_op =
            count ? static_cast<double>(touched) / static_cast<double>(count) : 0.0;
        r.levels = tf.level_count();
        records.push_back(r);
      };

      tf.reset_touched();
      auto t0 = clock::now();
      for (auto [u, v] : edges) tf.link(u, v);
      auto t1 = clock::now();
      record("build", edges.size(),
             std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
             tf.touched_clusters());

      // update batch: cut + relink pairs over random tree edges
      const std::uint32_t kUpdatePairs = 5000;  // 10^4 update operations
      std::mt19937_64 rng(seed ^ (n * 0x9e3779b9ull));
      tf.reset_touched();
      std::uint64_t update_ns = 0;
      if (!edges.empty()) {
        auto u0 = clock::now();
        for (std::uint32_t i = 0; i < kUpdatePairs; ++i) {
          auto [u, v] = edges[rng() % edges.size()];
          tf.cut(u, v);
          tf.link(u, v);
        }
        auto u1 = clock::now();
        update_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(u1 - u0).count();
      }
      record("update", 2ull * kUpdatePairs, update_ns, tf.touched_clusters());

      // card queries over a fixed rotating probe set (keeps the measured
      // walk resident so sizes compare structure depth, not cache misses)
      const std::uint32_t kCardOps = 20000;
      std::vector<VertexId> probes;
      for (std::uint32_t i = 0; i < 64; ++i) probes.push_back(rng() % std::max(1u, n));
      std::int64_t sink = 0;
      tf.reset_touched();
      auto q0 = clock::now();
      for (std::uint32_t i = 0; i < kCardOps; ++i)
        sink += tf.matching_cardinality(probes[i % probes.size()]).value();
      auto q1 = clock::now();
      if (sink == -1) std::fprintf(stderr, "unreachable\n");
      record("card", kCardOps,
             std::chrono::duration_cast<std::chrono::nanoseconds>(q1 - q0).count(), 0);
    }
  }
  return records;
}

namespace {

oracle::TreeSpec component_spec(const TopForest& tf, VertexId v) {
  const Forest& f = tf.forest();
  auto comp = f.component_of(v);
  std::vector<std::uint32_t> remap(f.vertex_count(), kNoIndex);
  for (std::size_t i = 0; i < comp.size(); ++i) remap[comp[i]] = static_cast<std::uint32_t>(i);
  oracle::TreeSpec spec;
  spec.n = static_cast<std::uint32_t>(comp.size());
  for (VertexId x : comp)
    for (EdgeId e : f.ring(x))
      if (f.edge(e).u == x) spec.add_edge(remap[f.edge(e).u], remap[f.edge(e).v], f.edge(e).weight);
  return spec;
}

}  // namespace

FuzzReport fuzz_run(const FuzzOptions& opt) {
  FuzzReport rep;
  const std::uint32_t n = std::max<std::uint32_t>(2, opt.n);
  const std::uint64_t budget =
      opt.touched_budget ? opt.touched_budget
                         : static_cast<std::uint64_t>(64.0 * (std::log2(double(n)) + 1.0));
  TopForest tf(opt.weighted);
  tf.ensure_vertices(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::mt19937_64 rng(opt.seed);

  auto fail = [&](const std::string& why) { rep.failure = why; };

  for (std::uint64_t op = 1; op <= opt.ops && rep.ok(); ++op) {
    bool did = false;
    const bool want_link = edges.size() + 1 < n && (edges.empty() || (rng() & 1));
    tf.reset_touched();
    if (want_link) {
      for (int tries = 0; tries < 64 && !did; ++tries) {
        VertexId u = static_cast<VertexId>(rng() % n);
        VertexId v = static_cast<VertexId>(rng() % n);
        if (u == v || tf.forest().has_edge(u, v)) continue;
        std::uint32_t ru = tf.root_slot(u), rv = tf.root_slot(v);
        if (ru != kNoIndex && ru == rv) continue;
        std::int64_t w = opt.weighted ? static_cast<std::int64_t>(rng() % 101) : 1;
        tf.link(u, v, w);
        edges.emplace_back(u, v);
        did = true;
      }
    }
    if (!did && !edges.empty()) {
      std::size_t idx = rng() % edges.size();
      auto [u, v] = edges[idx];
      tf.cut(u, v);
      edges[idx] = edges.back();
      edges.pop_back();
      did = true;
    }
    if (!did) continue;
    ++rep.ops_done;
    rep.max_touched = std::max(rep.max_touched, tf.touched_clusters());
    if (tf.touched_clusters() > budget) {
      fail("touched-budget");
      break;
    }

    if (opt.audit_every && op % opt.audit_every == 0) {
      ++rep.audits;
      VertexId v = static_cast<VertexId>(rng() % n);
      oracle::TreeSpec spec = component_spec(tf, v);
      std::int64_t want = opt.weighted ? oracle::weighted_dp_matching(spec)
                                       : oracle::greedy_leaf_matching(spec);
      if (!(tf.matching_cardinality(v) == MatchValue(want))) {
        fail("cardinality-oracle");
        break;
      }
    }

    if (opt.rebuild_every && op % opt.rebuild_every == 0) {
      ++rep.rebuild_audits;
      std::string bad = tf.check();
      if (!bad.empty()) {
        fail("check:" + bad);
        break;
      }
      std::vector<std::tuple<VertexId, VertexId, std::int64_t>> cur;
      for (auto [u, v] : edges)
        cur.emplace_back(u, v, tf.forest().edge(tf.forest().edge_between(u, v)).weight);
      TopForest fresh = TopForest::build(n, cur, opt.weighted);
      for (VertexId v = 0; v < n; ++v) {
        if (!(tf.matching_cardinality(v) == fresh.matching_cardinality(v))) {
          fail("rebuild-card");
          break;
        }
      }
      if (!rep.ok()) break;
      for (auto [u, v] : edges) {
        EdgeId e1 = tf.forest().edge_between(u, v);
        EdgeId e2 = fresh.forest().edge_between(u, v);
        if (edge_in_some_maximum(tf, e1) != edge_in_some_maximum(fresh, e2)) {
          fail("rebuild-matched");
          break;
        }
      }
    }
  }
  return rep;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "kind,n,op,count,total_ns,ns_per_op,touched_per_op,levels\n";
  char buf[64];
  for (const BenchRecord& r : records) {
    out << r.kind << "," << r.n << "," << r.op << "," << r.count << "," << r.total_ns << ",";
    std::snprintf(buf, sizeof buf, "%.2f", r.ns_per_op);
    out << buf << ",";
    std::snprintf(buf, sizeof buf, "%.3f", r.touched_per_op);
    out << buf << "," << r.levels << "\n";
  }
  return out.str();
}

}  // namespace dynmatch::workload
