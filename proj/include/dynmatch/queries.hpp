#pragma once

#include <span>
#include <vector>

#include "dynmatch/top_forest.hpp"

namespace dynmatch {

enum class Tristate { Matched, Unmatched, Infeasible };

const char* tristate_name(Tristate t) noexcept;

struct EdgeConstraint {
  EdgeId edge;
  bool matched;
};

/// Whether some maximum matching of e's component contains e. Walks the
/// ancestor path of e carrying the set of boundary states whose stored
/// optimum is attainable by a matching containing e; at the root the answer
/// is whether that set meets the argmax states.
bool edge_in_some_maximum(const TopForest& tf, EdgeId e);

/// Status of edge e across the maximum-value matchings consistent with the
/// constraints: Matched if some such matching contains e, Unmatched if none
/// does, Infeasible if no matching satisfies the constraints at all.
/// Propagates constrained tables up the ancestor paths of the constrained
/// edges, so it costs O(k log n).
Tristate edge_matched_given(const TopForest& tf, std::span<const EdgeConstraint> constraints,
                            EdgeId e);

}  // namespace dynmatch
