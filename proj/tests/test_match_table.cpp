#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "dynmatch/match_table.hpp"
#include "dynmatch/oracle.hpp"
#include "helpers.hpp"

using namespace dynmatch;

namespace {

const MatchValue N = MatchValue::null();

MatchTable edge_table() { return make_table(MatchValue(0), N, N, MatchValue(1)); }

// Exhaustive joined table of two trees sharing one vertex, for checking
// merge_at_shared against enumeration. P spans 0..pn-1 with boundary (a, s);
// Q is relabeled to share s and has boundary (s, c).
JoinedTable joined_by_enumeration(const oracle::TreeSpec& whole, std::uint32_t a, std::uint32_t s,
                                  std::uint32_t c, std::uint64_t p_mask) {
  JoinedTable j;
  const std::uint32_t full = 1u << whole.edges.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<bool> hit(whole.n, false);
    bool ok = true;
    std::int64_t val = 0;
    for (std::size_t i = 0; i < whole.edges.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      auto [u, v, w] = whole.edges[i];
      if (hit[u] || hit[v])
        ok = false;
      else {
        hit[u] = hit[v] = true;
        ++val;
      }
    }
    if (!ok) continue;
    // shared-vertex colour split by side
    bool p_black = false, q_black = false;
    for (std::size_t i = 0; i < whole.edges.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      auto [u, v, w] = whole.edges[i];
      if (u == s || v == s) ((p_mask >> i) & 1 ? p_black : q_black) = true;
    }
    if (p_black && q_black) continue;  // cannot happen in a matching anyway
    MatchValue& slot = j.at(hit[a] ? 1 : 0, (p_black || q_black) ? 1 : 0, hit[c] ? 1 : 0);
    slot = vmax(slot, MatchValue(val));
  }
  return j;
}

}  // namespace

TEST_CASE("null algebra") {
  CHECK((N + MatchValue(3)).is_null());
  CHECK((MatchValue(3) + N).is_null());
  CHECK((N + N).is_null());
  CHECK(MatchValue(2) + MatchValue(3) == MatchValue(5));
  CHECK(vmax(N, MatchValue(4)) == MatchValue(4));
  CHECK(vmax(MatchValue(4), N) == MatchValue(4));
  CHECK(vmax(N, N).is_null());
  CHECK(vmax(MatchValue(1), MatchValue(7)) == MatchValue(7));
  CHECK(N.str() == "$");
  CHECK(MatchValue(12).str() == "12");
}

TEST_CASE("base tables") {
  CHECK(table_base(1, false) == edge_table());
  CHECK(table_base(99, false) == edge_table());  // weight ignored unweighted
  CHECK(table_base(5, true) == make_table(MatchValue(0), N, N, MatchValue(5)));
  CHECK(table_base(0, true) == make_table(MatchValue(0), N, N, MatchValue(0)));
  CHECK(table_text(edge_table()) == "(0,$,$,1)");
}

TEST_CASE("merge of two edge tables") {
  JoinedTable j = merge_at_shared(edge_table(), edge_table());
  CHECK(j.at(0, 0, 0) == MatchValue(0));
  CHECK(j.at(0, 0, 1).is_null());
  CHECK(j.at(0, 1, 1) == MatchValue(1));  // the right edge matched
  CHECK(j.at(1, 1, 0) == MatchValue(1));  // the left edge matched
  CHECK(j.at(1, 0, 0).is_null());
  CHECK(j.at(1, 1, 1).is_null());  // both matched would double-cover the middle
  CHECK(vmax(j.at(0, 0, 1), j.at(0, 1, 1)) == MatchValue(1));
}

TEST_CASE("compress of two edges reproduces the two-edge path") {
  CHECK(table_compress(edge_table(), edge_table()) ==
        make_table(MatchValue(0), MatchValue(1), MatchValue(1), N));
}

TEST_CASE("compress follows the three-term maxima expansion") {
  std::mt19937_64 rng(11);
  auto random_table = [&]() {
    MatchTable t;
    t[kWW] = MatchValue(static_cast<std::int64_t>(rng() % 5));
    for (int s : {kWB, kBW, kBB})
      t[s] = (rng() % 4 == 0) ? N : MatchValue(static_cast<std::int64_t>(rng() % 5));
    return t;
  };
  for (int iter = 0; iter < 200; ++iter) {
    MatchTable p = random_table(), q = random_table();
    MatchTable r = table_compress(p, q);
    // expected, written out as the four three-way maxima
    CHECK(r[kWW] == vmax(vmax(p[kWW] + q[kWW], p[kWW] + q[kBW]), p[kWB] + q[kWW]));
    CHECK(r[kWB] == vmax(vmax(p[kWW] + q[kWB], p[kWW] + q[kBB]), p[kWB] + q[kWB]));
    CHECK(r[kBW] == vmax(vmax(p[kBW] + q[kWW], p[kBW] + q[kBW]), p[kBB] + q[kWW]));
    CHECK(r[kBB] == vmax(vmax(p[kBW] + q[kWB], p[kBW] + q[kBB]), p[kBB] + q[kWB]));
  }
}

TEST_CASE("rake of an edge onto an edge") {
  // leaf (A,B) onto (B,C): over (B,C) the A side folds away
  CHECK(table_rake(edge_table(), edge_table()) ==
        make_table(MatchValue(0), N, MatchValue(1), MatchValue(1)));
}

TEST_CASE("table helpers") {
  MatchTable t = make_table(MatchValue(0), MatchValue(1), N, MatchValue(1));
  CHECK(table_best(t) == MatchValue(1));
  CHECK(table_best(edge_table()) == MatchValue(1));
  CHECK(table_swap(t) == make_table(MatchValue(0), N, MatchValue(1), MatchValue(1)));
  CHECK(table_swap(table_swap(t)) == t);
  MatchTable sym = make_table(MatchValue(0), MatchValue(1), MatchValue(1), N);
  CHECK(table_swap(sym) == sym);
  CHECK(table_text(make_table(MatchValue(1), MatchValue(2), MatchValue(1), MatchValue(2))) ==
        "(1,2,1,2)");
}

TEST_CASE("merge, compress and rake agree with enumeration on joined trees") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 400; ++iter) {
    // P spans vertices 0..pn-1, its boundary (a, s) with s shared;
    // Q spans s plus fresh vertices, boundary (s, c).
    std::uint32_t pn = 2 + rng() % 3;  // up to 3 edges per side
    std::uint32_t qn = 2 + rng() % 3;
    auto pe = dmtest::weighted_random_tree(pn, rng, 0);
    auto qe = dmtest::weighted_random_tree(qn, rng, 0);
    std::uint32_t s = rng() % pn;
    std::uint32_t a = rng() % pn;
    if (a == s) a = (s + 1) % pn;
    // relabel Q: its vertex 0 becomes s, others shift past P
    auto relabel = [&](std::uint32_t v) { return v == 0 ? s : pn + v - 1; };
    oracle::TreeSpec whole;
    whole.n = pn + qn - 1;
    std::uint64_t p_mask = 0;
    for (std::size_t i = 0; i < pe.size(); ++i) {
      auto [u, v, w] = pe[i];
      whole.add_edge(u, v, w);
      p_mask |= 1ull << i;
    }
    for (auto [u, v, w] : qe) whole.add_edge(relabel(u), relabel(v), w);
    std::uint32_t c = relabel(qn - 1);  // a fresh Q-side vertex, never s

    oracle::TreeSpec pspec = dmtest::to_spec(pn, pe);
    oracle::TreeSpec qspec;
    qspec.n = pn + qn - 1;
    for (auto [u, v, w] : qe) qspec.add_edge(relabel(u), relabel(v), w);

    MatchTable pt = oracle::exhaustive_tables(pspec, a, s);
    MatchTable qt = oracle::exhaustive_tables(qspec, s, c);

    JoinedTable j = merge_at_shared(pt, qt);
    JoinedTable want = joined_by_enumeration(whole, a, s, c, p_mask);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) CHECK(j.at(x, y, z) == want.at(x, y, z));

    // compress equals the whole tree's table over (a, c)
    CHECK(table_compress(pt, qt) == oracle::exhaustive_tables(whole, a, c));

    // rake applies when a dangles: force it by checking against enumeration
    // over (s, c) whenever a has no edges outside P (true by construction)
    CHECK(table_rake(oracle::exhaustive_tables(pspec, a, s), qt) ==
          oracle::exhaustive_tables(whole, s, c));
  }
}

TEST_CASE("compress association order does not matter on path pieces") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    // three consecutive path pieces with random small tables from real trees
    auto piece = [&](std::uint32_t n, std::uint32_t& a, std::uint32_t& b) {
      auto e = dmtest::weighted_random_tree(n, rng, 0);
      a = 0;
      b = n - 1;
      return oracle::exhaustive_tables(dmtest::to_spec(n, e), a, b);
    };
    std::uint32_t a, b;
    MatchTable t1 = piece(2 + rng() % 3, a, b);
    MatchTable t2 = piece(2 + rng() % 3, a, b);
    MatchTable t3 = piece(2 + rng() % 3, a, b);
    CHECK(table_compress(table_compress(t1, t2), t3) ==
          table_compress(t1, table_compress(t2, t3)));
  }
}
