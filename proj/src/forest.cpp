#include "dynmatch/forest.hpp"

#include <algorithm>
#include <queue>

namespace dynmatch {

VertexId Forest::add_vertex() {
  rings_.emplace_back();
  return static_cast<VertexId>(rings_.size() - 1);
}

void Forest::ensure_vertices(std::uint32_t count) {
  if (rings_.size() < count) rings_.resize(count);
}

std::uint64_t Forest::pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void Forest::check_vertex(VertexId v) const {
  if (v >= rings_.size()) raise(Errc::NoSuchEdge, "unknown vertex " + std::to_string(v));
}

EdgeId Forest::insert_edge(VertexId u, VertexId v, std::int64_t w) {
  if (u != v && u < rings_.size() && v < rings_.size() && !has_edge(u, v) && connected(u, v))
    raise(Errc::WouldCreateCycle, "edge would close a cycle");
  return insert_edge_prechecked(u, v, w);
}

EdgeId Forest::insert_edge_prechecked(VertexId u, VertexId v, std::int64_t w) {
  if (u == v) raise(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
  ensure_vertices(std::max(u, v) + 1);
  if (has_edge(u, v)) raise(Errc::DuplicateEdge, "edge already present");
  const EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, w, true});
  rings_[u].push_back(id);
  rings_[v].push_back(id);
  by_pair_.emplace(pair_key(u, v), id);
  ++live_edges_;
  return id;
}

EdgeId Forest::remove_edge(VertexId u, VertexId v) {
  const EdgeId id = edge_between(u, v);
  Edge& e = edges_[id];
  for (VertexId x : {e.u, e.v}) {
    auto& ring = rings_[x];
    ring.erase(std::find(ring.begin(), ring.end(), id));
  }
  by_pair_.erase(pair_key(u, v));
  e.alive = false;
  --live_edges_;
  return id;
}

EdgeId Forest::ring_successor(VertexId v, EdgeId e) const {
  check_vertex(v);
  const auto& ring = rings_[v];
  auto it = std::find(ring.begin(), ring.end(), e);
  if (it == ring.end()) raise(Errc::NotIncident, "edge not incident to vertex");
  auto next = std::next(it);
  return next == ring.end() ? ring.front() : *next;
}

EdgeId Forest::ring_predecessor(VertexId v, EdgeId e) const {
  check_vertex(v);
  const auto& ring = rings_[v];
  auto it = std::find(ring.begin(), ring.end(), e);
  if (it == ring.end()) raise(Errc::NotIncident, "edge not incident to vertex");
  return it == ring.begin() ? ring.back() : *std::prev(it);
}

bool Forest::has_edge(VertexId u, VertexId v) const {
  return by_pair_.find(pair_key(u, v)) != by_pair_.end();
}

EdgeId Forest::edge_between(VertexId u, VertexId v) const {
  auto it = by_pair_.find(pair_key(u, v));
  if (it == by_pair_.end()) raise(Errc::NoSuchEdge, "no such edge");
  return it->second;
}

bool Forest::connected(VertexId u, VertexId v) const {
  if (u >= rings_.size() || v >= rings_.size()) return false;
  if (u == v) return true;
  std::vector<VertexId> stack{u};
  std::vector<bool> seen(rings_.size(), false);
  seen[u] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : rings_[x]) {
      VertexId y = edges_[e].other(x);
      if (y == v) return true;
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

std::uint32_t Forest::component_count() const {
  std::vector<bool> seen(rings_.size(), false);
  std::uint32_t components = 0;
  for (VertexId s = 0; s < rings_.size(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : rings_[x]) {
        VertexId y = edges_[e].other(x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

std::vector<VertexId> Forest::component_of(VertexId v) const {
  std::vector<VertexId> out;
  if (v >= rings_.size()) return out;
  std::vector<bool> seen(rings_.size(), false);
  std::queue<VertexId> q;
  q.push(v);
  seen[v] = true;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    out.push_back(x);
    for (EdgeId e : rings_[x]) {
      VertexId y = edges_[e].other(x);
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  return out;
}

}  // namespace dynmatch
