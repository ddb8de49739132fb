#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "dynmatch/forest.hpp"

using namespace dynmatch;

TEST_CASE("insert and remove basics") {
  Forest f;
  VertexId a = f.add_vertex(), b = f.add_vertex();
  EdgeId e = f.insert_edge(a, b, 1);
  CHECK(e == 0);
  CHECK(f.ring(a).size() == 1);
  CHECK(f.ring(b).size() == 1);

  CHECK_THROWS_AS(f.insert_edge(a, b, 1), Error);
  CHECK_THROWS_AS(f.insert_edge(a, a, 1), Error);

  VertexId c = f.add_vertex();
  f.insert_edge(b, c, 1);
  CHECK_THROWS_AS(f.insert_edge(a, c, 1), Error);  // 3-cycle

  f.remove_edge(a, b);
  CHECK(f.ring(a).empty());
  CHECK(f.live_edge_count() == 1);
  CHECK_THROWS_AS(f.remove_edge(a, b), Error);
  CHECK_THROWS_AS(f.remove_edge(a, c), Error);

  f.remove_edge(b, c);
  CHECK(f.ring(b).empty());
  CHECK(f.ring(c).empty());
  f.insert_edge(a, c, 1);  // fine again after the path is gone
}

TEST_CASE("error codes carry through") {
  Forest f;
  f.ensure_vertices(3);
  f.insert_edge(0, 1);
  try {
    f.insert_edge(0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateEdge);
  }
  try {
    f.insert_edge(2, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SelfLoop);
  }
  f.insert_edge(1, 2);
  try {
    f.insert_edge(0, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WouldCreateCycle);
  }
}

TEST_CASE("ring successor follows insertion order") {
  Forest f;
  f.ensure_vertices(4);
  EdgeId e0 = f.insert_edge(0, 1);
  EdgeId e1 = f.insert_edge(0, 2);
  EdgeId e2 = f.insert_edge(0, 3);
  CHECK(f.ring_successor(0, e0) == e1);
  CHECK(f.ring_successor(0, e1) == e2);
  CHECK(f.ring_successor(0, e2) == e0);
  CHECK(f.ring_predecessor(0, e0) == e2);

  // degree-1 vertex: successor is the edge itself
  CHECK(f.ring_successor(1, e0) == e0);
  CHECK_THROWS_AS(f.ring_successor(1, e1), Error);

  f.remove_edge(0, 2);
  CHECK(f.ring_successor(0, e0) == e2);
  CHECK(f.ring_successor(0, e2) == e0);
}

TEST_CASE("structure invariants under random edits") {
  std::mt19937_64 rng(9);
  Forest f;
  const std::uint32_t n = 40;
  f.ensure_vertices(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int op = 0; op < 2000; ++op) {
    if (edges.size() < n - 1 && (edges.empty() || (rng() & 1))) {
      VertexId u = rng() % n, v = rng() % n;
      if (u == v || f.has_edge(u, v) || f.connected(u, v)) continue;
      f.insert_edge(u, v);
      edges.emplace_back(u, v);
    } else if (!edges.empty()) {
      std::size_t i = rng() % edges.size();
      f.remove_edge(edges[i].first, edges[i].second);
      edges[i] = edges.back();
      edges.pop_back();
    }
    std::uint64_t ring_sum = 0;
    for (VertexId v = 0; v < n; ++v) ring_sum += f.degree(v);
    CHECK(ring_sum == 2 * f.live_edge_count());
    CHECK(f.component_count() == n - f.live_edge_count());

    // successor iterated deg(v) times returns to the start
    for (VertexId v = 0; v < n; ++v) {
      if (f.degree(v) == 0) continue;
      EdgeId start = f.ring(v).front();
      EdgeId cur = start;
      for (std::uint32_t k = 0; k < f.degree(v); ++k) cur = f.ring_successor(v, cur);
      CHECK(cur == start);
    }
  }
}
