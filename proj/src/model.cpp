// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/model.hpp"

#include <algorithm>
#include <set>

namespace wvass {

bool WVass::has_state(const StateId& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
}

const Transition* WVass::find_transition(const std::string& name) const {
    for (const Transition& t : transitions) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

std::vector<std::string> validate(const WVass& model) {
    std::vector<std::string> errors;
    if (!model.dims.valid()) {
        errors.push_back("dimensions invalid: need d >= 0, w >= 0, d + w >= 1");
    }
    {
        std::set<StateId> seen;
        for (const StateId& s : model.states) {
            if (!seen.insert(s).second) {
                errors.push_back("state '" + s + "' declared twice");
            }
        }
    }
    std::set<std::string> names;
    for (const Transition& t : model.transitions) {
        if (!names.insert(t.name).second) {
            errors.push_back("transition '" + t.name + "' declared twice");
        }
        if (!model.has_state(t.src)) {
            errors.push_back("transition '" + t.name + "': unknown source state '" +
                             t.src + "'");
        }
        if (!model.has_state(t.dst)) {
            errors.push_back("transition '" + t.name +
                             "': unknown destination state '" + t.dst + "'");
        }
        if (static_cast<int>(t.counter_delta.size()) != model.dims.counters) {
            errors.push_back("transition '" + t.name + "': nat delta has " +
                             std::to_string(t.counter_delta.size()) +
                             " entries, expected " +
                             std::to_string(model.dims.counters));
        }
        if (static_cast<int>(t.weight_delta.size()) != model.dims.weights) {
            errors.push_back("transition '" + t.name + "': wt delta has " +
                             std::to_string(t.weight_delta.size()) +
                             " entries, expected " +
                             std::to_string(model.dims.weights));
        }
    }
    return errors;
}

std::vector<Step> post_configs(const WVass& model, const Config& c) {
    require_conforms(model.dims, c, "post_configs");
    std::vector<Step> steps;
    for (const Transition& t : model.transitions) {
        if (t.src != c.state) continue;
        Config next;
        next.state = t.dst;
        next.counters.resize(c.counters.size());
        bool enabled = true;
        for (std::size_t i = 0; i < c.counters.size(); ++i) {
            next.counters[i] = c.counters[i] + t.counter_delta[i];
            if (next.counters[i] < 0) {
                enabled = false;
                break;
            }
        }
        if (!enabled) continue;
        next.weights.resize(c.weights.size());
        for (std::size_t i = 0; i < c.weights.size(); ++i) {
            next.weights[i] = c.weights[i] + t.weight_delta[i];
        }
        steps.push_back(Step{t.name, std::move(next)});
    }
    return steps;
}

std::optional<Config> replay_run(const WVass& model, const Run& run) {
    if (!conforms(model.dims, run.start)) return std::nullopt;
    Config current = run.start;
    for (const std::string& name : run.transitions) {
        const Transition* t = model.find_transition(name);
        if (t == nullptr || t->src != current.state) return std::nullopt;
        Config next;
        next.state = t->dst;
        next.counters.resize(current.counters.size());
        for (std::size_t i = 0; i < current.counters.size(); ++i) {
            next.counters[i] = current.counters[i] + t->counter_delta[i];
            if (next.counters[i] < 0) return std::nullopt;
        }
        next.weights.resize(current.weights.size());
        for (std::size_t i = 0; i < current.weights.size(); ++i) {
            next.weights[i] = current.weights[i] + t->weight_delta[i];
        }
        current = std::move(next);
    }
    return current;
}

} // namespace wvass
