// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wvass/model.hpp"

namespace wvass {

/// How a truncated node's label compares to the comparable ancestor found on
/// its path.
enum class AncestorRelation {
    Below, // ancestor label strictly below the node label
    Above, // ancestor label strictly above the node label
    Equal,
};

struct TreeNode {
    enum class Mark { Expanded, Leaf, Truncated };
    std::size_t id = 0;
    Config label;
    std::optional<std::size_t> parent;
    std::string via_transition; // edge into this node; empty at the root
    Mark mark = Mark::Leaf;
    std::optional<std::size_t> comparable_ancestor; // Truncated only
    std::optional<AncestorRelation> relation;       // Truncated only
};

/// Reachability tree truncated at nodes whose label is comparable to an
/// ancestor's. Finite for the supported (counter-free) models, where any set
/// of pairwise incomparable configs has at most one member per control state.
struct AntichainTree {
    std::vector<TreeNode> nodes; // node 0 is the root, ids in BFS order

    std::vector<std::string> path_to(std::size_t id) const;
};

/// Builds the tree breadth-first, expanding children in transition
/// declaration order and recording for each truncated node the first
/// comparable ancestor on its root-to-node path. Throws
/// UnsupportedModelError for models with guarded counters and
/// CapExceededError when the node cap is hit (the tree itself is always
/// finite; the cap guards against implementation bugs and huge instances).
AntichainTree build_antichain_tree(const WVass& model, const Config& start,
                                   std::int64_t node_cap);

struct ComparabilityWitness {
    Config ancestor_label;
    Config node_label;
    AncestorRelation relation;
    std::vector<std::string> path; // transitions from the root to the node
};

struct TerminationVerdict {
    bool terminates;
    std::optional<ComparabilityWitness> witness; // present iff not terminating
};

/// The model has an infinite run from `start` exactly when some tree path
/// carries two comparable labels; the truncation marks are precisely those
/// pairs.
TerminationVerdict decide_termination(const WVass& model, const Config& start,
                                      std::int64_t node_cap);

struct BoundednessVerdict {
    bool bounded;
    std::optional<ComparabilityWitness> witness; // present iff unbounded
};

/// The reachable set from `start` is infinite exactly when some tree path
/// carries two strictly comparable labels.
BoundednessVerdict decide_boundedness(const WVass& model, const Config& start,
                                      std::int64_t node_cap);

} // namespace wvass
