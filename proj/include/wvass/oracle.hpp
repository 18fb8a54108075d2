// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wvass/ideal.hpp"
#include "wvass/model.hpp"

namespace wvass {
// Brute-force reference semantics, kept deliberately independent of the
// symbolic encodings: membership is computed by unfolding the ordering
// definition over explicit finite boxes, never through the encoded inclusion
// rules. Desk-scale only.
namespace oracle {

/// A finite box of vector values: counters range over [0, hi], weights over
/// [lo, hi] per coordinate.
struct Box {
    std::vector<std::int64_t> counter_hi;
    std::vector<std::int64_t> weight_lo;
    std::vector<std::int64_t> weight_hi;
};

bool box_conforms(const Dims& dims, const Box& box);

/// Number of vector values in the box; throws CapExceededError beyond 10^7.
std::int64_t box_size(const Dims& dims, const Box& box);

/// Every config with the given state whose vectors lie in the box, in
/// deterministic order.
std::vector<Config> box_configs(const Dims& dims, const Box& box,
                                const StateId& state);

/// Membership of a config below an encoded limit point, computed directly
/// from the ordering definition extended with omega / +inf on top.
bool member_by_definition(const Dims& dims, const Ideal& ideal,
                          const Config& c);

/// The configs of the box (at the ideal's state) below the ideal's limit
/// point, by member_by_definition.
std::vector<Config> box_members(const Dims& dims, const Ideal& ideal,
                                const Box& box);

/// Downward closure within the box of all one-step successors of the given
/// configs (successors may lie outside the box; the closure stays inside).
std::vector<Config> brute_post_box(const WVass& model,
                                   std::span<const Config> sources,
                                   const Box& box);

struct ExploreResult {
    std::vector<Config> visited; // BFS discovery order
    bool cap_hit = false;        // visited-set or depth cap reached
    bool cycle_found = false;    // a cycle inside the visited graph
    bool comparable_pair_found = false; // two comparable configs on one run
    bool comparable_conclusive = false; // the path search finished its budget
};

/// Bounded BFS of the reachable configs plus cycle detection on the visited
/// graph, and a separate bounded walk over run prefixes looking for a
/// comparable pair of configs on one path.
ExploreResult explore(const WVass& model, const Config& start,
                      std::int64_t state_cap, std::int64_t depth_cap);

struct BruteCoverResult {
    bool found = false;
    Run run; // shortest witnessing run when found
    Config endpoint;
};

/// Breadth-first search for a config dominating the target. Never concludes
/// non-coverability: an unsuccessful search just exhausts its caps.
BruteCoverResult brute_cover(const WVass& model, const Config& start,
                             const Config& target, std::int64_t step_cap,
                             std::int64_t state_cap);

} // namespace oracle
} // namespace wvass
