#include "dynmatch/top_forest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dynmatch/oracle.hpp"

namespace dynmatch {

const char* cluster_kind_name(ClusterKind k) noexcept {
  switch (k) {
    case ClusterKind::Base: return "base";
    case ClusterKind::Rake: return "rake";
    case ClusterKind::Compress: return "compress";
    case ClusterKind::Lift: return "lift";
  }
  return "?";
}

TopForest::TopForest(bool weighted) : weighted_(weighted) {}

TopForest TopForest::build(std::uint32_t vertices,
                           const std::vector<std::tuple<VertexId, VertexId, std::int64_t>>& edges,
                           bool weighted) {
  TopForest tf(weighted);
  tf.ensure_vertices(vertices);
  for (const auto& [u, v, w] : edges) {
    EdgeId e = tf.forest_.insert_edge_prechecked(u, v, w);
    std::uint32_t b = tf.new_base(e);
    tf.edge_to_base_.resize(std::max<std::size_t>(tf.edge_to_base_.size(), e + 1), kNoIndex);
    tf.edge_to_base_[e] = b;
  }
  tf.run_sweep();
  return tf;
}

VertexId TopForest::add_vertex() { return forest_.add_vertex(); }

void TopForest::ensure_vertices(std::uint32_t count) { forest_.ensure_vertices(count); }

EdgeId TopForest::link(VertexId u, VertexId v, std::int64_t w) {
  if (u == v) raise(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
  ensure_vertices(std::max(u, v) + 1);
  if (forest_.has_edge(u, v)) raise(Errc::DuplicateEdge, "edge already present");
  std::uint32_t ru = root_slot(u);
  std::uint32_t rv = root_slot(v);
  if (ru != kNoIndex && ru == rv) raise(Errc::WouldCreateCycle, "edge would close a cycle");
  EdgeId e = forest_.insert_edge_prechecked(u, v, w);
  std::uint32_t b = new_base(e);
  edge_to_base_.resize(std::max<std::size_t>(edge_to_base_.size(), e + 1), kNoIndex);
  edge_to_base_[e] = b;
  run_sweep();
  return e;
}

void TopForest::cut(VertexId u, VertexId v) {
  EdgeId e = forest_.edge_between(u, v);
  std::uint32_t b = edge_to_base_[e];
  kill_cascade(b);
  edge_to_base_[e] = kNoIndex;
  forest_.remove_edge(u, v);
  run_sweep();
}

// ---------------------------------------------------------------- rings --

TopForest::Ring* TopForest::ring_find(std::uint32_t level, VertexId v) {
  if (level >= level_rings_.size()) return nullptr;
  auto it = level_rings_[level].find(v);
  return it == level_rings_[level].end() ? nullptr : &it->second;
}

const TopForest::Ring* TopForest::ring_find(std::uint32_t level, VertexId v) const {
  if (level >= level_rings_.size()) return nullptr;
  auto it = level_rings_[level].find(v);
  return it == level_rings_[level].end() ? nullptr : &it->second;
}

std::uint32_t TopForest::ring_count(std::uint32_t level, VertexId v) const {
  const Ring* r = ring_find(level, v);
  return r ? r->size() : 0;
}

void TopForest::ring_insert(std::uint32_t level, VertexId v, std::uint32_t slot) {
  if (level_rings_.size() <= level) level_rings_.resize(level + 1);
  Ring& r = level_rings_[level][v];
  if (r.head == kNoIndex) {
    r.head = slot;
    r.links[slot] = {slot, slot};
  } else {
    std::uint32_t tail = r.links[r.head].first;
    r.links[slot] = {tail, r.head};
    r.links[tail].second = slot;
    r.links[r.head].first = slot;
  }
  pend(level).touched.push_back(v);
}

void TopForest::ring_remove(std::uint32_t level, VertexId v, std::uint32_t slot) {
  auto& map = level_rings_[level];
  auto it = map.find(v);
  Ring& r = it->second;
  auto [prev, next] = r.links[slot];
  r.links.erase(slot);
  if (r.links.empty()) {
    map.erase(it);
  } else {
    r.links[prev].second = next;
    r.links[next].first = prev;
    if (r.head == slot) r.head = next;
  }
  pend(level).touched.push_back(v);
}

std::uint32_t TopForest::ring_next(std::uint32_t level, VertexId v, std::uint32_t slot) const {
  return ring_find(level, v)->links.at(slot).second;
}

std::uint32_t TopForest::ring_prev(std::uint32_t level, VertexId v, std::uint32_t slot) const {
  return ring_find(level, v)->links.at(slot).first;
}

std::vector<std::uint32_t> TopForest::ring_members(std::uint32_t level, VertexId v) const {
  std::vector<std::uint32_t> out;
  const Ring* r = ring_find(level, v);
  if (!r) return out;
  std::uint32_t s = r->head;
  do {
    out.push_back(s);
    s = r->links.at(s).second;
  } while (s != r->head);
  return out;
}

// ---------------------------------------------------- cluster lifecycle --

std::uint32_t TopForest::alloc_cluster() {
  std::uint32_t slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
  } else {
    slot = static_cast<std::uint32_t>(arena_.size());
    arena_.emplace_back();
  }
  Cluster& c = arena_[slot];
  c = Cluster{};
  c.uid = next_uid_++;
  c.alive = true;
  return slot;
}

TopForest::LevelPend& TopForest::pend(std::uint32_t level) {
  if (pend_.size() <= level) pend_.resize(level + 1);
  pend_[level].dirty = true;
  return pend_[level];
}

void TopForest::mark_pending(std::uint32_t slot) {
  Cluster& c = arena_[slot];
  if (c.pending) return;
  c.pending = true;
  pend(c.level).pending.push_back(slot);
}

std::uint32_t TopForest::new_base(EdgeId e) {
  std::uint32_t slot = alloc_cluster();
  Cluster& c = arena_[slot];
  c.kind = ClusterKind::Base;
  c.level = 0;
  c.edge = e;
  c.edge_count = 1;
  c.bound[0] = forest_.edge(e).u;
  c.bound[1] = forest_.edge(e).v;
  ring_insert(0, c.bound[0], slot);
  ring_insert(0, c.bound[1], slot);
  pend(0).added.push_back(slot);
  mark_pending(slot);
  ++touched_;
  return slot;
}

std::uint32_t TopForest::new_combine(ClusterKind kind, std::uint32_t c0, std::uint32_t c1,
                                     VertexId via) {
  std::uint32_t slot = alloc_cluster();
  Cluster& c = arena_[slot];
  c.kind = kind;
  c.level = static_cast<std::uint16_t>(arena_[c0].level + 1);
  c.child[0] = c0;
  c.child[1] = c1;
  c.via = via;
  c.edge_count = arena_[c0].edge_count + arena_[c1].edge_count;
  if (kind == ClusterKind::Compress) {
    c.bound[0] = arena_[c0].other(via);
    c.bound[1] = arena_[c1].other(via);
  } else {  // rake keeps the target's boundary
    c.bound[0] = arena_[c1].bound[0];
    c.bound[1] = arena_[c1].bound[1];
  }
  consume(c0, slot);
  consume(c1, slot);
  ring_insert(c.level, c.bound[0], slot);
  ring_insert(c.level, c.bound[1], slot);
  pend(c.level).added.push_back(slot);
  mark_pending(slot);
  ++touched_;
  return slot;
}

std::uint32_t TopForest::new_lift(std::uint32_t child) {
  std::uint32_t slot = alloc_cluster();
  Cluster& c = arena_[slot];
  c.kind = ClusterKind::Lift;
  c.level = static_cast<std::uint16_t>(arena_[child].level + 1);
  c.child[0] = child;
  c.edge_count = arena_[child].edge_count;
  c.bound[0] = arena_[child].bound[0];
  c.bound[1] = arena_[child].bound[1];
  consume(child, slot);
  ring_insert(c.level, c.bound[0], slot);
  ring_insert(c.level, c.bound[1], slot);
  pend(c.level).added.push_back(slot);
  mark_pending(slot);
  ++touched_;
  return slot;
}

void TopForest::consume(std::uint32_t slot, std::uint32_t parent) {
  Cluster& c = arena_[slot];
  c.parent = parent;
  if (c.is_root) {
    total_ -= best_of(c).value();
    c.is_root = false;
  }
}

void TopForest::make_root(std::uint32_t slot) {
  Cluster& c = arena_[slot];
  if (c.is_root) return;
  c.is_root = true;
  total_ += best_of(c).value();
}

void TopForest::kill_cascade(std::uint32_t slot) {
  while (slot != kNoIndex) {
    Cluster& c = arena_[slot];
    if (!c.alive) break;
    c.alive = false;
    ++touched_;
    if (c.is_root) {
      total_ -= best_of(c).value();
      c.is_root = false;
    }
    ring_remove(c.level, c.bound[0], slot);
    ring_remove(c.level, c.bound[1], slot);
    for (std::uint32_t ch : c.child) {
      if (ch != kNoIndex && arena_[ch].alive) {
        arena_[ch].parent = kNoIndex;
        mark_pending(ch);
      }
    }
    graveyard_.push_back(slot);
    slot = c.parent;
  }
}

// ------------------------------------------------------------- annotation --

MatchTable TopForest::compute_table(const Cluster& c) const {
  switch (c.kind) {
    case ClusterKind::Base:
      return table_base(forest_.edge(c.edge).weight, weighted_);
    case ClusterKind::Lift:
      return arena_[c.child[0]].table;
    case ClusterKind::Rake: {
      const Cluster& leaf = arena_[c.child[0]];
      const Cluster& onto = arena_[c.child[1]];
      MatchTable lt = leaf.bound[1] == c.via ? leaf.table : table_swap(leaf.table);
      MatchTable tt = onto.bound[0] == c.via ? onto.table : table_swap(onto.table);
      MatchTable r = table_rake(lt, tt);  // over (via, onto-other)
      return c.bound[0] == c.via ? r : table_swap(r);
    }
    case ClusterKind::Compress: {
      const Cluster& p = arena_[c.child[0]];
      const Cluster& q = arena_[c.child[1]];
      MatchTable pt = p.bound[1] == c.via ? p.table : table_swap(p.table);
      MatchTable qt = q.bound[0] == c.via ? q.table : table_swap(q.table);
      MatchTable r = table_compress(pt, qt);  // over (p-other, q-other)
      return c.bound[0] == p.other(c.via) ? r : table_swap(r);
    }
  }
  return MatchTable{};
}

void TopForest::finalize_cluster(std::uint32_t slot) {
  Cluster& c = arena_[slot];
  if (c.kind != ClusterKind::Lift) {
    // leaf clusters store the dangling endpoint first
    std::uint32_t n0 = ring_count(c.level, c.bound[0]);
    std::uint32_t n1 = ring_count(c.level, c.bound[1]);
    if (n0 > 1 && n1 == 1) std::swap(c.bound[0], c.bound[1]);
  }
  c.table = compute_table(c);
}

// ------------------------------------------------------------ validity --

bool TopForest::leaf_at(const Cluster& c, VertexId attach) const {
  return ring_count(c.level, c.other(attach)) == 1;
}

bool TopForest::formation_valid(const Cluster& parent) const {
  switch (parent.kind) {
    case ClusterKind::Base:
      return true;
    case ClusterKind::Lift: {
      const Cluster& ch = arena_[parent.child[0]];
      return ring_count(ch.level, ch.bound[0]) > 1 || ring_count(ch.level, ch.bound[1]) > 1;
    }
    case ClusterKind::Rake: {
      const Cluster& leaf = arena_[parent.child[0]];
      return leaf_at(leaf, parent.via);
    }
    case ClusterKind::Compress:
      return ring_count(static_cast<std::uint32_t>(parent.level - 1), parent.via) == 2;
  }
  return false;
}

// ------------------------------------------------------------- schedule --

bool TopForest::steal_if_lifted(std::uint32_t slot) {
  Cluster& c = arena_[slot];
  if (c.parent == kNoIndex) return true;
  if (arena_[c.parent].kind != ClusterKind::Lift) return false;
  kill_cascade(c.parent);
  return true;
}

bool TopForest::try_combine(std::uint32_t slot) {
  const std::uint32_t lvl = arena_[slot].level;
  const VertexId bounds[2] = {arena_[slot].bound[0], arena_[slot].bound[1]};

  for (VertexId v : bounds) {
    if (ring_count(lvl, v) != 2) continue;
    std::uint32_t y = ring_next(lvl, v, slot);
    if (!steal_if_lifted(y)) continue;
    new_combine(ClusterKind::Compress, slot, y, v);
    return true;
  }
  for (VertexId v : bounds) {
    if (ring_count(lvl, v) < 2) continue;
    std::uint32_t l = ring_next(lvl, v, slot);
    if (l == slot || !leaf_at(arena_[l], v)) continue;
    if (!steal_if_lifted(l)) continue;
    new_combine(ClusterKind::Rake, l, slot, v);
    return true;
  }
  const std::uint32_t n0 = ring_count(lvl, bounds[0]);
  const std::uint32_t n1 = ring_count(lvl, bounds[1]);
  VertexId attach = kNoIndex;
  if (n0 == 1 && n1 >= 2)
    attach = bounds[1];
  else if (n1 == 1 && n0 >= 2)
    attach = bounds[0];
  if (attach != kNoIndex) {
    std::uint32_t t = ring_prev(lvl, attach, slot);
    if (t != slot && steal_if_lifted(t)) {
      new_combine(ClusterKind::Rake, slot, t, attach);
      return true;
    }
  }
  return false;
}

void TopForest::process_level(std::uint32_t level) {
  // Work from copies: creating clusters resizes pend_ and arena_ underneath.
  if (level >= pend_.size() || !pend_[level].dirty) return;

  const std::vector<std::uint32_t> added = pend_[level].added;
  for (std::uint32_t slot : added)
    if (arena_[slot].alive) finalize_cluster(slot);

  // Re-examine formations around every ring change at this level. A ring
  // much larger than the number of changes it saw cannot host a compress at
  // this vertex (needs two incident clusters), a raked leaf dangling here
  // (needs one), or a component root, so the walk is skipped.
  std::vector<VertexId> touched = pend_[level].touched;
  std::sort(touched.begin(), touched.end());
  for (std::size_t i = 0; i < touched.size();) {
    const VertexId v = touched[i];
    std::size_t changes = 0;
    while (i < touched.size() && touched[i] == v) {
      ++changes;
      ++i;
    }
    if (ring_count(level, v) > changes + 3) continue;
    for (std::uint32_t slot : ring_members(level, v)) {
      if (!arena_[slot].alive) continue;
      if (arena_[slot].parent == kNoIndex) {
        mark_pending(slot);
      } else if (!formation_valid(arena_[arena_[slot].parent])) {
        kill_cascade(arena_[slot].parent);
      }
    }
  }

  auto by_uid = [this](std::uint32_t a, std::uint32_t b) { return arena_[a].uid < arena_[b].uid; };

  std::vector<std::uint32_t> work = pend_[level].pending;
  std::sort(work.begin(), work.end(), by_uid);
  for (std::uint32_t slot : work) {
    if (!arena_[slot].alive || arena_[slot].parent != kNoIndex) continue;
    try_combine(slot);
  }

  work = pend_[level].pending;
  std::sort(work.begin(), work.end(), by_uid);
  for (std::uint32_t slot : work) {
    if (!arena_[slot].alive || arena_[slot].parent != kNoIndex) continue;
    if (ring_count(level, arena_[slot].bound[0]) == 1 &&
        ring_count(level, arena_[slot].bound[1]) == 1)
      make_root(slot);
    else
      new_lift(slot);
  }
}

void TopForest::run_sweep() {
  for (std::uint32_t l = 0; l < pend_.size(); ++l) process_level(l);
  for (LevelPend& lp : pend_) {
    for (std::uint32_t slot : lp.pending) arena_[slot].pending = false;
    lp.added.clear();
    lp.pending.clear();
    lp.touched.clear();
    lp.dirty = false;
  }
  free_slots_.insert(free_slots_.end(), graveyard_.begin(), graveyard_.end());
  graveyard_.clear();
}

// -------------------------------------------------------------- queries --

std::uint32_t TopForest::root_slot(VertexId v) const {
  if (v >= forest_.vertex_count() || forest_.degree(v) == 0) return kNoIndex;
  std::uint32_t slot = ring_find(0, v)->head;
  while (arena_[slot].parent != kNoIndex) slot = arena_[slot].parent;
  return slot;
}

std::uint32_t TopForest::base_slot(EdgeId e) const {
  if (e >= edge_to_base_.size() || edge_to_base_[e] == kNoIndex || !forest_.edge(e).alive)
    raise(Errc::NoSuchEdge, "no such edge");
  return edge_to_base_[e];
}

ClusterView TopForest::view_of(const Cluster& c) const {
  ClusterView v;
  v.uid = c.uid;
  v.level = c.level;
  v.kind = c.kind;
  v.bound[0] = c.bound[0];
  v.bound[1] = c.bound[1];
  v.table = c.table;
  v.parent_uid = c.parent == kNoIndex ? 0 : arena_[c.parent].uid;
  v.edge_count = c.edge_count;
  return v;
}

std::optional<ClusterView> TopForest::root_of(VertexId v) const {
  std::uint32_t slot = root_slot(v);
  if (slot == kNoIndex) return std::nullopt;
  return view_of(arena_[slot]);
}

std::vector<ClusterView> TopForest::ancestor_path(EdgeId e) const {
  std::vector<ClusterView> out;
  std::uint32_t slot = base_slot(e);
  while (slot != kNoIndex) {
    out.push_back(view_of(arena_[slot]));
    slot = arena_[slot].parent;
  }
  return out;
}

MatchValue TopForest::matching_cardinality(VertexId v) const {
  std::uint32_t slot = root_slot(v);
  if (slot == kNoIndex) return MatchValue(0);
  return table_best(arena_[slot].table);
}

std::uint32_t TopForest::level_count() const {
  std::uint32_t top = 0;
  bool any = false;
  for (const Cluster& c : arena_) {
    if (!c.alive) continue;
    any = true;
    top = std::max<std::uint32_t>(top, c.level);
  }
  return any ? top + 1 : 0;
}

std::uint32_t TopForest::live_cluster_count() const {
  std::uint32_t n = 0;
  for (const Cluster& c : arena_)
    if (c.alive) ++n;
  return n;
}

std::vector<ClusterView> TopForest::clusters_at_level(std::uint32_t level) const {
  std::vector<ClusterView> out;
  for (const Cluster& c : arena_)
    if (c.alive && c.level == level) out.push_back(view_of(c));
  std::sort(out.begin(), out.end(),
            [](const ClusterView& a, const ClusterView& b) { return a.uid < b.uid; });
  return out;
}

std::string TopForest::dump() const {
  std::vector<const Cluster*> live;
  for (const Cluster& c : arena_)
    if (c.alive) live.push_back(&c);
  std::sort(live.begin(), live.end(),
            [](const Cluster* a, const Cluster* b) { return a->uid < b->uid; });
  std::ostringstream os;
  for (const Cluster* c : live) {
    os << "c" << c->uid << " l=" << c->level << " " << cluster_kind_name(c->kind) << " b=("
       << c->bound[0] << "," << c->bound[1] << ") t=" << table_text(c->table) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- check --

namespace {

void collect_span(const TopForest& tf, std::uint32_t slot, std::vector<EdgeId>& out) {
  const Cluster& c = tf.cluster(slot);
  if (c.kind == ClusterKind::Base) {
    out.push_back(c.edge);
    return;
  }
  collect_span(tf, c.child[0], out);
  if (c.kind != ClusterKind::Lift) collect_span(tf, c.child[1], out);
}

}  // namespace

std::string TopForest::check() const {
  const std::uint32_t nv = forest_.vertex_count();

  // forest-level shape
  std::uint64_t ring_sum = 0;
  for (VertexId v = 0; v < nv; ++v) ring_sum += forest_.degree(v);
  if (ring_sum != 2ull * forest_.live_edge_count()) return "ring-shape";
  if (forest_.component_count() != nv - forest_.live_edge_count()) return "acyclicity";

  // per-cluster structural checks
  std::vector<std::uint32_t> live;
  for (std::uint32_t s = 0; s < arena_.size(); ++s)
    if (arena_[s].alive) live.push_back(s);

  for (std::uint32_t s : live) {
    const Cluster& c = arena_[s];
    if (c.bound[0] == c.bound[1]) return "cluster-shape";
    if (c.kind != ClusterKind::Base) {
      int nchildren = c.kind == ClusterKind::Lift ? 1 : 2;
      std::uint32_t ec = 0;
      for (int i = 0; i < nchildren; ++i) {
        std::uint32_t ch = c.child[i];
        if (ch == kNoIndex || !arena_[ch].alive || arena_[ch].parent != s ||
            arena_[ch].level + 1 != c.level)
          return "child-links";
        ec += arena_[ch].edge_count;
      }
      if (ec != c.edge_count) return "edge-count";
      if (!formation_valid(c)) return "formation";
    } else {
      if (c.level != 0 || !forest_.edge(c.edge).alive || c.edge_count != 1) return "base-shape";
    }
    if (c.is_root != (c.parent == kNoIndex)) return "root-flag";
  }

  // every live edge must sit in exactly one cluster per level, bottom to root
  std::int64_t root_sum = 0;
  std::vector<std::uint32_t> roots;
  for (std::uint32_t s : live)
    if (arena_[s].is_root) {
      roots.push_back(s);
      root_sum += table_best(arena_[s].table).value();
    }
  if (root_sum != total_) return "total-accounting";

  for (EdgeId e = 0; e < forest_.edge_slots(); ++e) {
    if (!forest_.edge(e).alive) continue;
    std::uint32_t slot = edge_to_base_[e];
    std::uint32_t expect_level = 0;
    while (true) {
      const Cluster& c = arena_[slot];
      if (!c.alive || c.level != expect_level) return "chain-structure";
      if (c.parent == kNoIndex) {
        if (!c.is_root) return "chain-top";
        break;
      }
      slot = c.parent;
      ++expect_level;
    }
  }

  // ring membership matches live clusters exactly
  std::uint64_t expected_entries = 2ull * live.size();
  std::uint64_t actual_entries = 0;
  for (const auto& level : level_rings_)
    for (const auto& [v, ring] : level) actual_entries += ring.size();
  if (expected_entries != actual_entries) return "ring-membership";
  for (std::uint32_t s : live) {
    const Cluster& c = arena_[s];
    for (VertexId v : c.bound) {
      const Ring* r = ring_find(c.level, v);
      if (!r || r->links.find(s) == r->links.end()) return "ring-membership";
      // the ring walk must visit every member once
      if (ring_members(c.level, v).size() != r->size()) return "ring-membership";
    }
  }

  // annotation locality and table sanity
  for (std::uint32_t s : live) {
    const Cluster& c = arena_[s];
    if (!(compute_table(c) == c.table)) return "annotation-locality";
    if (c.table[kWW].is_null()) return "table-ww-null";
    if (!weighted_) {
      if (!table_slack_ok(c.table)) return "slack-bounds";
      for (int st = 0; st < 4; ++st)
        if (!c.table[st].is_null() && c.table[st].value() > c.edge_count) return "value-bound";
    }
  }

  // boundary invariant: shared vertices of the span are exactly the stored
  // boundary (a subset for the root, which shares nothing)
  std::vector<std::uint32_t> in_span_deg(nv, 0);
  for (std::uint32_t s : live) {
    const Cluster& c = arena_[s];
    std::vector<EdgeId> span;
    collect_span(*this, s, span);
    if (span.size() != c.edge_count) return "edge-count";
    std::vector<VertexId> verts;
    for (EdgeId e : span) {
      verts.push_back(forest_.edge(e).u);
      verts.push_back(forest_.edge(e).v);
    }
    for (VertexId v : verts) ++in_span_deg[v];
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::uint32_t shared = 0;
    bool bound_ok = true;
    for (VertexId v : verts) {
      if (in_span_deg[v] != forest_.degree(v)) {
        ++shared;
        if (!c.has_vertex(v)) bound_ok = false;
      }
    }
    for (VertexId v : verts) in_span_deg[v] = 0;
    if (!bound_ok || shared > 2) return "boundary";
    if (c.parent != kNoIndex && shared == 0) return "boundary";
  }

  // per-component root uniqueness, level bound, oracle audit
  std::vector<bool> seen(nv, false);
  for (VertexId v = 0; v < nv; ++v) {
    if (seen[v] || forest_.degree(v) == 0) {
      seen[v] = true;
      continue;
    }
    std::vector<VertexId> comp = forest_.component_of(v);
    for (VertexId x : comp) seen[x] = true;

    std::uint32_t root = root_slot(v);
    for (VertexId x : comp)
      if (root_slot(x) != root) return "root-uniqueness";

    const Cluster& rc = arena_[root];
    std::uint32_t edges = rc.edge_count;
    double bound = 4.0 * std::log2(std::max<double>(2.0, edges)) + 4.0;
    if (rc.level + 1 > bound) return "level-bound";

    // remap the component into a TreeSpec
    std::vector<std::uint32_t> remap(nv, kNoIndex);
    for (std::size_t i = 0; i < comp.size(); ++i) remap[comp[i]] = static_cast<std::uint32_t>(i);
    oracle::TreeSpec spec;
    spec.n = static_cast<std::uint32_t>(comp.size());
    std::vector<EdgeId> comp_edges;
    for (VertexId x : comp)
      for (EdgeId e : forest_.ring(x))
        if (forest_.edge(e).u == x) {
          spec.add_edge(remap[forest_.edge(e).u], remap[forest_.edge(e).v],
                        forest_.edge(e).weight);
          comp_edges.push_back(e);
        }

    if (!weighted_) {
      std::int64_t greedy = oracle::greedy_leaf_matching(spec);
      if (MatchValue(greedy) != table_best(rc.table)) return "oracle-cardinality";
    } else {
      std::int64_t dp = oracle::weighted_dp_matching(spec);
      if (MatchValue(dp) != table_best(rc.table)) return "oracle-weight";
    }

    if (edges <= 16) {
      // exhaustive table audit for every cluster of the component
      for (std::uint32_t s : live) {
        const Cluster& c = arena_[s];
        if (remap[c.bound[0]] == kNoIndex) continue;  // other component
        std::vector<EdgeId> span;
        collect_span(*this, s, span);
        std::vector<VertexId> sverts;
        oracle::TreeSpec sub;
        for (EdgeId e : span) {
          sverts.push_back(forest_.edge(e).u);
          sverts.push_back(forest_.edge(e).v);
        }
        std::sort(sverts.begin(), sverts.end());
        sverts.erase(std::unique(sverts.begin(), sverts.end()), sverts.end());
        std::vector<std::uint32_t> sub_remap(nv, kNoIndex);
        for (std::size_t i = 0; i < sverts.size(); ++i)
          sub_remap[sverts[i]] = static_cast<std::uint32_t>(i);
        sub.n = static_cast<std::uint32_t>(sverts.size());
        for (EdgeId e : span)
          sub.add_edge(sub_remap[forest_.edge(e).u], sub_remap[forest_.edge(e).v],
                       forest_.edge(e).weight);
        MatchTable want = oracle::exhaustive_tables(sub, sub_remap[c.bound[0]],
                                                    sub_remap[c.bound[1]], weighted_);
        if (!(want == c.table)) return "oracle-tables";
      }
    }
  }

  return "";
}

}  // namespace dynmatch
