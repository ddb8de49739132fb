#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "dynmatch/script.hpp"
#include "dynmatch/top_forest.hpp"
#include "dynmatch/workload.hpp"

using namespace dynmatch;
using namespace dynmatch::workload;

TEST_CASE("tree shapes") {
  auto path = make_tree_edges(Kind::Path, 4, 0);
  CHECK(path == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}});

  auto star = make_tree_edges(Kind::Star, 5, 0);
  CHECK(star.size() == 4);
  for (auto [u, v] : star) CHECK(u == 0);

  auto cat = make_tree_edges(Kind::Caterpillar, 9, 0);
  CHECK(cat.size() == 8);

  for (std::uint32_t n : {2u, 3u, 10u, 33u}) {
    auto rnd = make_tree_edges(Kind::Random, n, 42);
    CHECK(rnd.size() == n - 1);
    // connected and acyclic: run it through the structure
    std::vector<std::tuple<VertexId, VertexId, std::int64_t>> edges;
    for (auto [u, v] : rnd) edges.emplace_back(u, v, 1);
    TopForest tf = TopForest::build(n, edges);
    CHECK(tf.root_of(0).has_value());
    CHECK(tf.root_of(0)->edge_count == n - 1);
  }
}

TEST_CASE("prufer decode bijection samples") {
  // n = 4, sequence (2,2) is the star around 2
  auto t = prufer_decode({2, 2});
  std::set<std::pair<VertexId, VertexId>> got(t.begin(), t.end());
  CHECK(got == std::set<std::pair<VertexId, VertexId>>{{0, 2}, {1, 2}, {2, 3}});
}

TEST_CASE("workload generation is deterministic") {
  OpMix mix;
  mix.churn = 8;
  mix.cards = 4;
  mix.matched = 4;
  std::string a = gen_workload(Kind::Random, 10, 7, mix);
  std::string b = gen_workload(Kind::Random, 10, 7, mix);
  CHECK(a == b);
  CHECK(a != gen_workload(Kind::Random, 10, 8, mix));

  std::string p = gen_workload(Kind::Path, 4, 123);
  CHECK(p == "link 0 1\nlink 1 2\nlink 2 3\n");
}

TEST_CASE("generated workloads execute cleanly") {
  OpMix mix;
  mix.churn = 25;
  mix.cards = 5;
  mix.matched = 5;
  for (Kind k : {Kind::Path, Kind::Star, Kind::Caterpillar, Kind::Random}) {
    std::string script = gen_workload(k, 24, 99, mix) + "check\n";
    ScriptResult r = run_script(script);
    CHECK(!r.failed);
    CHECK(r.output.find("ok\n") != std::string::npos);
  }
}

TEST_CASE("bench produces one record per kind, size and op") {
  auto recs = bench({Kind::Path}, {64, 128}, 5);
  REQUIRE(recs.size() == 6);
  CHECK(recs[0].op == "build");
  CHECK(recs[1].op == "update");
  CHECK(recs[2].op == "card");
  CHECK(recs[0].n == 64);
  CHECK(recs[3].n == 128);
  for (const auto& r : recs) {
    CHECK(r.count > 0);
    CHECK(r.levels > 0);
  }

  std::string csv = bench_csv(recs);
  CHECK(csv.rfind("kind,n,op,count,total_ns,ns_per_op,touched_per_op,levels\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

  CHECK(bench_csv({}) == "kind,n,op,count,total_ns,ns_per_op,touched_per_op,levels\n");
}

TEST_CASE("fuzz driver smoke run with audits") {
  FuzzOptions fo;
  fo.n = 48;
  fo.ops = 3000;
  fo.seed = 11;
  fo.audit_every = 8;
  fo.rebuild_every = 500;
  FuzzReport rep = fuzz_run(fo);
  CHECK(rep.ok());
  CHECK(rep.ops_done == 3000);
  CHECK(rep.audits > 0);
  CHECK(rep.rebuild_audits > 0);

  fo.weighted = true;
  FuzzReport wrep = fuzz_run(fo);
  CHECK(wrep.ok());
}
