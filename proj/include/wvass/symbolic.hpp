// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>

#include "wvass/downset.hpp"
#include "wvass/model.hpp"

namespace wvass {

/// The downward closure of the one-step successors of an ideal through a
/// single transition. Shifting the limit point by the deltas is exact: omega
/// and +inf absorb the addition, and the step is feasible iff every finite
/// shifted counter limit is nonnegative. Yields at most one ideal.
std::optional<Ideal> ideal_post(const WVass& model, const Transition& t,
                                const Ideal& ideal);

/// The ideal decomposition of the downward closure of Post over a
/// downward-closed set: all per-ideal, per-transition images, minimized.
DownSet downset_post(const WVass& model, const DownSet& set);

/// An upward-closed set for models without counters: per control state an
/// optional lexicographic minimum. Because the weight order is total per
/// state, a union of up-closures collapses to the up-closure of the minimum.
struct UpSet {
    std::map<StateId, std::vector<std::int64_t>> lex_min;

    friend bool operator==(const UpSet&, const UpSet&) = default;
};

/// The up-closure of a single config (counter-free models only).
UpSet up_of_config(const WVass& model, const Config& c);

bool upset_contains(const WVass& model, const UpSet& set, const Config& c);

/// One backward iteration: U ∪ Pre-images of U, represented by per-state
/// minima. A transition with weight delta z from p to q turns the minimum at
/// q into the candidate minimum (min_q - z) at p. Throws
/// UnsupportedModelError when the model has counters: guards break the
/// single-minimum representation.
UpSet backward_step(const WVass& model, const UpSet& set);

} // namespace wvass
