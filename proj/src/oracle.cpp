#include "dynmatch/oracle.hpp"

#include <algorithm>
#include <set>

#include "dynmatch/errors.hpp"
#include "dynmatch/forest.hpp"

namespace dynmatch::oracle {

namespace {

void require_small(const TreeSpec& t) {
  if (t.edges.size() > 16) raise(Errc::TooLarge, "enumeration capped at 16 edges");
}

// Vertices matched by subset `mask`, or nullopt if the subset is not a matching.
bool is_matching(const TreeSpec& t, std::uint32_t mask, std::vector<bool>& hit) {
  std::fill(hit.begin(), hit.end(), false);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    auto [u, v, w] = t.edges[i];
    if (hit[u] || hit[v]) return false;
    hit[u] = hit[v] = true;
  }
  return true;
}

std::int64_t subset_value(const TreeSpec& t, std::uint32_t mask, bool weighted) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    if (mask & (1u << i)) total += weighted ? std::get<2>(t.edges[i]) : 1;
  return total;
}

}  // namespace

std::int64_t greedy_leaf_matching(const TreeSpec& t) {
  std::vector<std::vector<std::uint32_t>> adj(t.n);  // edge indices
  std::vector<bool> edge_alive(t.edges.size(), true);
  std::vector<std::uint32_t> deg(t.n, 0);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto [u, v, w] = t.edges[i];
    adj[u].push_back(static_cast<std::uint32_t>(i));
    adj[v].push_back(static_cast<std::uint32_t>(i));
    ++deg[u];
    ++deg[v];
  }
  std::set<std::uint32_t> leaves;
  for (std::uint32_t v = 0; v < t.n; ++v)
    if (deg[v] == 1) leaves.insert(v);

  auto drop_edge = [&](std::uint32_t ei) {
    edge_alive[ei] = false;
    auto [u, v, w] = t.edges[ei];
    for (std::uint32_t x : {u, v}) {
      if (--deg[x] == 1)
        leaves.insert(x);
      else if (deg[x] == 0)
        leaves.erase(x);
    }
  };

  std::int64_t matched = 0;
  while (!leaves.empty()) {
    std::uint32_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    if (deg[leaf] != 1) continue;
    std::uint32_t ei = kNoIndex;
    for (std::uint32_t cand : adj[leaf])
      if (edge_alive[cand]) ei = cand;
    auto [u, v, w] = t.edges[ei];
    std::uint32_t inner = (u == leaf) ? v : u;
    ++matched;
    drop_edge(ei);
    for (std::uint32_t cand : adj[inner])
      if (edge_alive[cand]) drop_edge(cand);
  }
  return matched;
}

MatchTable exhaustive_tables(const TreeSpec& t, std::uint32_t a, std::uint32_t b, bool weighted) {
  require_small(t);
  MatchTable table = make_table(MatchValue::null(), MatchValue::null(), MatchValue::null(),
                                MatchValue::null());
  std::vector<bool> hit(t.n, false);
  const std::uint32_t full = 1u << t.edges.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!is_matching(t, mask, hit)) continue;
    const int s = state_of(hit[a] ? 1 : 0, hit[b] ? 1 : 0);
    table[s] = vmax(table[s], MatchValue(subset_value(t, mask, weighted)));
  }
  return table;
}

Tristate exhaustive_edge_in_max(const TreeSpec& t, std::size_t e,
                                const std::vector<EdgeStatus>& constraints, bool weighted) {
  require_small(t);
  std::vector<bool> hit(t.n, false);
  const std::uint32_t full = 1u << t.edges.size();
  bool any = false, best_with_e = false, best_without_e = false;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    bool ok = true;
    for (const auto& c : constraints) {
      const bool has = (mask & (1u << c.edge_index)) != 0;
      if (has != c.matched) {
        ok = false;
        break;
      }
    }
    if (!ok || !is_matching(t, mask, hit)) continue;
    const std::int64_t val = subset_value(t, mask, weighted);
    if (!any || val > best) {
      any = true;
      best = val;
      best_with_e = best_without_e = false;
    }
    if (val == best) {
      if (mask & (1u << e))
        best_with_e = true;
      else
        best_without_e = true;
    }
  }
  if (!any) return Tristate::Infeasible;
  (void)best_without_e;
  return best_with_e ? Tristate::Matched : Tristate::Unmatched;
}

std::int64_t weighted_dp_matching(const TreeSpec& t) {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj(t.n);
  for (const auto& [u, v, w] : t.edges) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  }
  std::vector<std::int64_t> excl(t.n, 0), best(t.n, 0);
  std::vector<std::uint32_t> parent(t.n, kNoIndex), order;
  std::vector<bool> seen(t.n, false);
  order.reserve(t.n);
  for (std::uint32_t root = 0; root < t.n; ++root) {
    if (seen[root]) continue;
    // iterative DFS to get a child-before-parent order
    std::vector<std::uint32_t> stack{root};
    seen[root] = true;
    std::size_t first = order.size();
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (auto [y, w] : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = x;
          stack.push_back(y);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > first;) {
      std::uint32_t x = order[i];
      std::int64_t sum = 0;
      for (auto [y, w] : adj[x])
        if (parent[y] == x) sum += best[y];
      excl[x] = sum;
      std::int64_t top = sum;
      for (auto [y, w] : adj[x])
        if (parent[y] == x) top = std::max(top, sum - best[y] + excl[y] + w);
      best[x] = top;
    }
  }
  std::int64_t total = 0;
  for (std::uint32_t v = 0; v < t.n; ++v)
    if (parent[v] == kNoIndex) total += best[v];
  return total;
}

}  // namespace dynmatch::oracle
