// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvass/config.hpp"
#include "wvass/dims.hpp"

namespace wvass {

/// One transition: name, endpoint states, and the additive effect split into
/// the guarded counter part and the unguarded weight part.
struct Transition {
    std::string name;
    StateId src;
    StateId dst;
    std::vector<std::int64_t> counter_delta;
    std::vector<std::int64_t> weight_delta;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// A weighted VASS: finitely many control states and transitions. A step
/// adds the deltas and is enabled exactly when the successor's counters are
/// all nonnegative; weights are unconstrained.
struct WVass {
    Dims dims;
    std::vector<StateId> states;
    std::vector<Transition> transitions;

    friend bool operator==(const WVass&, const WVass&) = default;

    bool has_state(const StateId& s) const;
    const Transition* find_transition(const std::string& name) const;
};

/// Structural validation; returns every violation, empty means well-formed.
std::vector<std::string> validate(const WVass& model);

struct Step {
    std::string transition;
    Config target;

    friend bool operator==(const Step&, const Step&) = default;
};

/// All enabled transitions with their successor configs, in declaration
/// order.
std::vector<Step> post_configs(const WVass& model, const Config& c);

/// A run: a start config and a transition-name sequence.
struct Run {
    Config start;
    std::vector<std::string> transitions;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Replays a run, checking each guard; the final config, or nullopt when a
/// name is unknown, a source state mismatches, or a guard fails.
std::optional<Config> replay_run(const WVass& model, const Run& run);

} // namespace wvass
