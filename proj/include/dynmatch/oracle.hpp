#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "dynmatch/match_table.hpp"

namespace dynmatch::oracle {

/// Plain edge-list tree used by the reference implementations. Kept fully
/// independent of the dynamic structure on purpose: these functions are the
/// ground truth the structure is tested against.
struct TreeSpec {
  std::uint32_t n = 0;  // vertices are 0..n-1
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::int64_t>> edges;

  void add_edge(std::uint32_t u, std::uint32_t v, std::int64_t w = 1) { edges.emplace_back(u, v, w); }
};

enum class Tristate { Matched, Unmatched, Infeasible };

struct EdgeStatus {
  std::size_t edge_index;
  bool matched;
};

/// Maximum matching cardinality by repeatedly matching a leaf edge (smallest
/// leaf vertex first) and deleting the neighbourhood of its inner endpoint.
std::int64_t greedy_leaf_matching(const TreeSpec& t);

/// The four constrained optima of the whole edge set with boundary pair
/// (a, b), by enumerating all edge subsets. Requires at most 16 edges.
MatchTable exhaustive_tables(const TreeSpec& t, std::uint32_t a, std::uint32_t b,
                             bool weighted = false);

/// Membership of edge `e` across the maximum-value matchings consistent with
/// `constraints`, by enumeration. Requires at most 16 edges.
Tristate exhaustive_edge_in_max(const TreeSpec& t, std::size_t e,
                                const std::vector<EdgeStatus>& constraints,
                                bool weighted = false);

/// Maximum total weight of a matching, linear-time rooted DP.
std::int64_t weighted_dp_matching(const TreeSpec& t);

}  // namespace dynmatch::oracle
