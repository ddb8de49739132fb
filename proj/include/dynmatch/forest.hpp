#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "dynmatch/errors.hpp"

namespace dynmatch {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

/// The underlying forest: vertices, weighted edges, and one circular ring of
/// incident edges per vertex. Ring order is insertion order; removed edges
/// are spliced out keeping the order of the rest. Edge ids are never reused.
class Forest {
 public:
  struct Edge {
    VertexId u = kNoIndex;
    VertexId v = kNoIndex;
    std::int64_t weight = 1;
    bool alive = false;

    VertexId other(VertexId x) const { return x == u ? v : u; }
  };

  VertexId add_vertex();
  void ensure_vertices(std::uint32_t count);
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(rings_.size()); }

  /// Full validation including the acyclicity scan.
  EdgeId insert_edge(VertexId u, VertexId v, std::int64_t w = 1);
  /// Same bookkeeping without the cycle scan, for callers that already know
  /// u and v are in different components.
  EdgeId insert_edge_prechecked(VertexId u, VertexId v, std::int64_t w = 1);

  EdgeId remove_edge(VertexId u, VertexId v);

  EdgeId ring_successor(VertexId v, EdgeId e) const;
  EdgeId ring_predecessor(VertexId v, EdgeId e) const;

  bool has_edge(VertexId u, VertexId v) const;
  EdgeId edge_between(VertexId u, VertexId v) const;  // NoSuchEdge if absent
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(rings_[v].size()); }
  const std::vector<EdgeId>& ring(VertexId v) const { return rings_[v]; }

  std::uint32_t live_edge_count() const { return live_edges_; }
  std::uint32_t edge_slots() const { return static_cast<std::uint32_t>(edges_.size()); }

  bool connected(VertexId u, VertexId v) const;
  std::uint32_t component_count() const;
  /// Vertices of v's component, in BFS order from v.
  std::vector<VertexId> component_of(VertexId v) const;

 private:
  static std::uint64_t pair_key(VertexId u, VertexId v);
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rings_;
  std::unordered_map<std::uint64_t, EdgeId> by_pair_;
  std::uint32_t live_edges_ = 0;
};

}  // namespace dynmatch
