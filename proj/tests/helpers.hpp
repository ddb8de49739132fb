#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "dynmatch/oracle.hpp"
#include "dynmatch/top_forest.hpp"
#include "dynmatch/workload.hpp"

namespace dmtest {

using dynmatch::EdgeId;
using dynmatch::MatchTable;
using dynmatch::MatchValue;
using dynmatch::TopForest;
using dynmatch::VertexId;

inline dynmatch::oracle::TreeSpec to_spec(
    std::uint32_t n, const std::vector<std::tuple<VertexId, VertexId, std::int64_t>>& edges) {
  dynmatch::oracle::TreeSpec spec;
  spec.n = n;
  for (auto [u, v, w] : edges) spec.add_edge(u, v, w);
  return spec;
}

/// Fig-6-shaped tree: vertices a=0 b=1 c=2 d=3 e=4, edges a-c, b-c, c-d, d-e.
inline std::vector<std::tuple<VertexId, VertexId, std::int64_t>> paper_tree() {
  return {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}};
}

inline std::vector<std::tuple<VertexId, VertexId, std::int64_t>> weighted_random_tree(
    std::uint32_t n, std::mt19937_64& rng, std::int64_t max_w) {
  std::vector<std::tuple<VertexId, VertexId, std::int64_t>> out;
  if (n < 2) return out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n == 2) {
    edges = {{0, 1}};
  } else {
    std::vector<std::uint32_t> seq(n - 2);
    for (auto& s : seq) s = static_cast<std::uint32_t>(rng() % n);
    edges = dynmatch::workload::prufer_decode(seq);
  }
  for (auto [u, v] : edges)
    out.emplace_back(u, v, max_w > 0 ? static_cast<std::int64_t>(rng() % (max_w + 1)) : 1);
  return out;
}

/// All Prüfer sequences of labeled trees on n vertices (n >= 2).
template <class F>
void for_each_labeled_tree(std::uint32_t n, F&& f) {
  if (n == 2) {
    f(std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    return;
  }
  std::vector<std::uint32_t> seq(n - 2, 0);
  while (true) {
    f(dynmatch::workload::prufer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
}

}  // namespace dmtest
