#include "dynmatch/queries.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "dynmatch/errors.hpp"

namespace dynmatch {

const char* tristate_name(Tristate t) noexcept {
  switch (t) {
    case Tristate::Matched: return "matched";
    case Tristate::Unmatched: return "unmatched";
    case Tristate::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

// How a combine's stored child states map onto its stored parent states.
// States are canonicalized so the shared vertex sits second in child0 and
// first in child1; a shared-vertex colouring is valid when at most one side
// is black there.
struct ComboSpec {
  bool swap0 = false;
  bool swap1 = false;
  bool swap_parent = false;
  bool is_rake = false;
};

ComboSpec combo_spec(const TopForest& tf, const Cluster& pi) {
  const Cluster& c0 = tf.cluster(pi.child[0]);
  const Cluster& c1 = tf.cluster(pi.child[1]);
  ComboSpec cs;
  cs.is_rake = pi.kind == ClusterKind::Rake;
  cs.swap0 = c0.bound[1] != pi.via;
  cs.swap1 = c1.bound[0] != pi.via;
  cs.swap_parent = cs.is_rake ? (pi.bound[0] != pi.via) : (pi.bound[0] != c0.other(pi.via));
  return cs;
}

template <class F>
void for_each_combo(const ComboSpec& cs, F&& f) {
  for (int s0 = 0; s0 < 4; ++s0) {
    const int a = cs.swap0 ? state_swapped(s0) : s0;
    for (int s1 = 0; s1 < 4; ++s1) {
      const int b = cs.swap1 ? state_swapped(s1) : s1;
      if ((a & 1) && ((b >> 1) & 1)) continue;
      int sp;
      if (cs.is_rake) {
        const int shared = (a & 1) | ((b >> 1) & 1);
        sp = (shared << 1) | (b & 1);
      } else {
        sp = (((a >> 1) & 1) << 1) | (b & 1);
      }
      f(s0, s1, cs.swap_parent ? state_swapped(sp) : sp);
    }
  }
}

std::uint32_t walk_root(const TopForest& tf, std::uint32_t slot) {
  while (tf.cluster(slot).parent != kNoIndex) slot = tf.cluster(slot).parent;
  return slot;
}

}  // namespace

bool edge_in_some_maximum(const TopForest& tf, EdgeId e) {
  std::uint32_t slot = tf.base_slot(e);
  int mask = 1 << kBB;
  while (true) {
    const Cluster& c = tf.cluster(slot);
    if (c.parent == kNoIndex) break;
    const Cluster& pi = tf.cluster(c.parent);
    if (pi.kind != ClusterKind::Lift) {
      const bool from0 = pi.child[0] == slot;
      const MatchTable& t0 = tf.cluster(pi.child[0]).table;
      const MatchTable& t1 = tf.cluster(pi.child[1]).table;
      int next_mask = 0;
      for_each_combo(combo_spec(tf, pi), [&](int s0, int s1, int sp) {
        const int s_from = from0 ? s0 : s1;
        if (!(mask & (1 << s_from))) return;
        const MatchValue val = t0[s0] + t1[s1];
        if (!val.is_null() && val == pi.table[sp]) next_mask |= 1 << sp;
      });
      mask = next_mask;
      if (!mask) return false;
    }
    slot = c.parent;
  }
  const MatchTable& rt = tf.cluster(slot).table;
  const MatchValue best = table_best(rt);
  for (int s = 0; s < 4; ++s)
    if ((mask & (1 << s)) && rt[s] == best) return true;
  return false;
}

namespace {

// Best value among matchings consistent with the given per-edge statuses;
// null when none exists. Recomputes tables only along the ancestor paths of
// the constrained edges.
MatchValue constrained_best(const TopForest& tf,
                            const std::unordered_map<EdgeId, bool>& statuses,
                            std::uint32_t root) {
  if (statuses.empty()) return table_best(tf.cluster(root).table);

  std::unordered_map<std::uint32_t, MatchTable> tabs;
  std::vector<std::uint32_t> nodes;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& [edge, matched] : statuses) {
    std::uint32_t b = tf.base_slot(edge);
    const std::int64_t w = tf.weighted() ? tf.forest().edge(edge).weight : 1;
    tabs[b] = matched
                  ? make_table(MatchValue::null(), MatchValue::null(), MatchValue::null(), w)
                  : make_table(MatchValue(0), MatchValue::null(), MatchValue::null(),
                               MatchValue::null());
    std::uint32_t s = tf.cluster(b).parent;
    while (s != kNoIndex && seen.insert(s).second) {
      nodes.push_back(s);
      s = tf.cluster(s).parent;
    }
  }
  std::sort(nodes.begin(), nodes.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Cluster& ca = tf.cluster(a);
    const Cluster& cb = tf.cluster(b);
    return ca.level != cb.level ? ca.level < cb.level : ca.uid < cb.uid;
  });

  auto table_of = [&](std::uint32_t slot) -> const MatchTable& {
    auto it = tabs.find(slot);
    return it == tabs.end() ? tf.cluster(slot).table : it->second;
  };

  for (std::uint32_t slot : nodes) {
    const Cluster& pi = tf.cluster(slot);
    if (pi.kind == ClusterKind::Lift) {
      tabs[slot] = table_of(pi.child[0]);
      continue;
    }
    const MatchTable& t0 = table_of(pi.child[0]);
    const MatchTable& t1 = table_of(pi.child[1]);
    MatchTable r;
    r[kWW] = r[kWB] = r[kBW] = r[kBB] = MatchValue::null();
    for_each_combo(combo_spec(tf, pi),
                   [&](int s0, int s1, int sp) { r[sp] = vmax(r[sp], t0[s0] + t1[s1]); });
    tabs[slot] = r;
  }
  return table_best(table_of(root));
}

}  // namespace

Tristate edge_matched_given(const TopForest& tf, std::span<const EdgeConstraint> constraints,
                            EdgeId e) {
  if (constraints.size() > 8) raise(Errc::TooManyConstraints, "constraint list capped at 8");
  const std::uint32_t root = walk_root(tf, tf.base_slot(e));
  std::unordered_map<EdgeId, bool> statuses;
  for (const EdgeConstraint& c : constraints) {
    if (walk_root(tf, tf.base_slot(c.edge)) != root)
      raise(Errc::CrossComponent, "constraint outside the query component");
    auto [it, inserted] = statuses.emplace(c.edge, c.matched);
    if (!inserted && it->second != c.matched) return Tristate::Infeasible;
  }

  const MatchValue best = constrained_best(tf, statuses, root);
  if (best.is_null()) return Tristate::Infeasible;

  auto it = statuses.find(e);
  if (it != statuses.end()) return it->second ? Tristate::Matched : Tristate::Unmatched;

  statuses.emplace(e, true);
  const MatchValue best_with_e = constrained_best(tf, statuses, root);
  return (!best_with_e.is_null() && best_with_e == best) ? Tristate::Matched
                                                         : Tristate::Unmatched;
}

}  // namespace dynmatch
