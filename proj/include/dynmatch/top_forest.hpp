#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynmatch/forest.hpp"
#include "dynmatch/match_table.hpp"

namespace dynmatch {

using ClusterUid = std::uint64_t;

enum class ClusterKind : std::uint8_t { Base, Rake, Compress, Lift };

const char* cluster_kind_name(ClusterKind k) noexcept;

/// One node of the level structure. Storage slots are recycled after a
/// cluster dies, uids are not. Interior links (parent, child, ring entries)
/// are slot indices; the public API speaks uids.
struct Cluster {
  ClusterUid uid = 0;
  VertexId bound[2] = {kNoIndex, kNoIndex};
  std::uint32_t parent = kNoIndex;    // slot
  std::uint32_t child[2] = {kNoIndex, kNoIndex};  // slots; Rake: [raked leaf, target]
  VertexId via = kNoIndex;            // shared vertex of a Rake/Compress
  EdgeId edge = kNoIndex;             // Base only
  std::uint32_t edge_count = 0;
  std::uint16_t level = 0;
  ClusterKind kind = ClusterKind::Base;
  bool alive = false;
  bool pending = false;
  bool is_root = false;
  MatchTable table;

  VertexId other(VertexId x) const { return bound[0] == x ? bound[1] : bound[0]; }
  bool has_vertex(VertexId x) const { return bound[0] == x || bound[1] == x; }
};

/// Read-only snapshot of a cluster for callers outside the engine.
struct ClusterView {
  ClusterUid uid = 0;
  std::uint32_t level = 0;
  ClusterKind kind = ClusterKind::Base;
  VertexId bound[2] = {kNoIndex, kNoIndex};
  MatchTable table;
  ClusterUid parent_uid = 0;  // 0 when root
  std::uint32_t edge_count = 0;
};

/// Level-structured top tree over a forest, annotated with the four
/// constrained matching optima per cluster. Supports edge insertion and
/// deletion with level-by-level repair: combinations whose preconditions no
/// longer hold are undone and the affected clusters are re-combined with the
/// same deterministic schedule a fresh build uses.
///
/// Schedule, per level, over the clusters needing a parent in ascending
/// creation order: try a compress at either boundary vertex (the vertex must
/// have exactly two incident clusters), else absorb the ring-successor if it
/// is a leaf attached there, else, if itself a leaf, rake onto the
/// ring-predecessor. A candidate partner consumed by a lift is reclaimed by
/// deleting the lift chain ("steal"); leftovers are lifted unless alone in
/// their component, which makes them that component's root.
class TopForest {
 public:
  explicit TopForest(bool weighted = false);

  /// Batch build over an edge list (acyclic input required).
  static TopForest build(std::uint32_t vertices,
                         const std::vector<std::tuple<VertexId, VertexId, std::int64_t>>& edges,
                         bool weighted = false);

  VertexId add_vertex();
  void ensure_vertices(std::uint32_t count);

  EdgeId link(VertexId u, VertexId v, std::int64_t w = 1);
  void cut(VertexId u, VertexId v);

  std::optional<ClusterView> root_of(VertexId v) const;
  std::vector<ClusterView> ancestor_path(EdgeId e) const;

  MatchValue matching_cardinality(VertexId v) const;
  MatchValue total_cardinality() const { return MatchValue(total_); }

  bool weighted() const { return weighted_; }
  const Forest& forest() const { return forest_; }

  /// Clusters created plus destroyed since the last reset.
  std::uint64_t touched_clusters() const { return touched_; }
  void reset_touched() { touched_ = 0; }

  /// 1 + highest level holding a live cluster; 0 for an edgeless forest.
  std::uint32_t level_count() const;
  std::vector<ClusterView> clusters_at_level(std::uint32_t level) const;
  ClusterView view_of(const Cluster& c) const;

  /// Line-oriented dump of all live clusters, ascending uid.
  std::string dump() const;

  /// Full invariant and oracle audit; empty string when everything holds,
  /// otherwise the name of the first violated invariant.
  std::string check() const;

  // Low-level access for the query layer and tests.
  std::uint32_t base_slot(EdgeId e) const;
  std::uint32_t root_slot(VertexId v) const;  // kNoIndex when isolated
  const Cluster& cluster(std::uint32_t slot) const { return arena_[slot]; }
  std::uint32_t live_cluster_count() const;

 private:
  struct LevelPend {
    std::vector<std::uint32_t> added;    // creation order
    std::vector<std::uint32_t> pending;  // needing a parent
    std::vector<VertexId> touched;       // vertices whose ring changed
    bool dirty = false;

    bool empty() const { return added.empty() && pending.empty() && touched.empty(); }
  };

  /// Circular ring of incident clusters in insertion order, with O(1)
  /// insert, splice-out and successor lookup.
  struct Ring {
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> links;  // prev,next
    std::uint32_t head = kNoIndex;

    std::uint32_t size() const { return static_cast<std::uint32_t>(links.size()); }
  };

  // -- ring bookkeeping --
  Ring* ring_find(std::uint32_t level, VertexId v);
  const Ring* ring_find(std::uint32_t level, VertexId v) const;
  std::uint32_t ring_count(std::uint32_t level, VertexId v) const;
  void ring_insert(std::uint32_t level, VertexId v, std::uint32_t slot);
  void ring_remove(std::uint32_t level, VertexId v, std::uint32_t slot);
  std::uint32_t ring_next(std::uint32_t level, VertexId v, std::uint32_t slot) const;
  std::uint32_t ring_prev(std::uint32_t level, VertexId v, std::uint32_t slot) const;
  std::vector<std::uint32_t> ring_members(std::uint32_t level, VertexId v) const;

  // -- cluster lifecycle --
  std::uint32_t alloc_cluster();
  void release_slot(std::uint32_t slot);
  std::uint32_t new_base(EdgeId e);
  std::uint32_t new_combine(ClusterKind kind, std::uint32_t c0, std::uint32_t c1, VertexId via);
  std::uint32_t new_lift(std::uint32_t child);
  void kill_cascade(std::uint32_t slot);
  void consume(std::uint32_t slot, std::uint32_t parent);
  void make_root(std::uint32_t slot);
  void mark_pending(std::uint32_t slot);
  LevelPend& pend(std::uint32_t level);

  // -- repair sweep --
  void run_sweep();
  void process_level(std::uint32_t level);
  void finalize_cluster(std::uint32_t slot);
  MatchTable compute_table(const Cluster& c) const;
  bool formation_valid(const Cluster& parent) const;
  bool try_combine(std::uint32_t slot);
  bool steal_if_lifted(std::uint32_t slot);  // partner reclaim
  bool leaf_at(const Cluster& c, VertexId attach) const;

  MatchValue best_of(const Cluster& c) const { return table_best(c.table); }

  Forest forest_;
  bool weighted_ = false;
  std::vector<Cluster> arena_;
  std::vector<std::uint32_t> free_slots_;
  std::vector<std::uint32_t> graveyard_;  // slots to recycle once the sweep ends
  std::vector<std::uint32_t> edge_to_base_;
  std::vector<std::unordered_map<VertexId, Ring>> level_rings_;
  std::vector<LevelPend> pend_;
  ClusterUid next_uid_ = 1;
  std::int64_t total_ = 0;
  std::uint64_t touched_ = 0;
};

}  // namespace dynmatch
