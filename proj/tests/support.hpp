// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared generators and box helpers for the randomized suites. Everything is
// seeded explicitly so failures reproduce.
#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wvass/cover.hpp"
#include "wvass/downset.hpp"
#include "wvass/model.hpp"
#include "wvass/oracle.hpp"

namespace wvass::testing {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng);
    }

    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(range(0, xs.size() - 1))];
    }
};

inline Dims random_dims(Rng& rng, int max_total = 3) {
    while (true) {
        const int d = static_cast<int>(rng.range(0, max_total));
        const int w = static_cast<int>(rng.range(0, max_total - d));
        if (d + w >= 1) return Dims{d, w};
    }
}

inline std::vector<StateId> make_states(int count) {
    std::vector<StateId> states;
    for (int i = 0; i < count; ++i) states.push_back("q" + std::to_string(i));
    return states;
}

inline Ideal random_ideal(Rng& rng, const Dims& dims,
                          const std::vector<StateId>& states,
                          std::int64_t bound) {
    std::vector<CounterLimit> u;
    for (int i = 0; i < dims.counters; ++i) {
        u.push_back(rng.chance(0.2) ? CounterLimit::omega()
                                    : CounterLimit::finite(rng.range(0, bound)));
    }
    std::vector<WeightLimit> m;
    const int prefix = static_cast<int>(rng.range(0, dims.weights));
    for (int i = 0; i < dims.weights; ++i) {
        m.push_back(i < prefix ? WeightLimit::finite(rng.range(-bound, bound))
                               : WeightLimit::plus_inf());
    }
    return Ideal::canonical(rng.pick(states), std::move(u), std::move(m));
}

inline DownSet random_downset(Rng& rng, const Dims& dims,
                              const std::vector<StateId>& states,
                              std::int64_t bound, int max_ideals = 3) {
    std::vector<Ideal> ideals;
    const int count = static_cast<int>(rng.range(0, max_ideals));
    for (int i = 0; i < count; ++i) {
        ideals.push_back(random_ideal(rng, dims, states, bound));
    }
    return minimize(dims, ideals);
}

inline WVass random_model(Rng& rng, const Dims& dims, int max_states,
                          int max_transitions, std::int64_t max_delta) {
    WVass model;
    model.dims = dims;
    model.states = make_states(static_cast<int>(rng.range(1, max_states)));
    const int count = static_cast<int>(rng.range(1, max_transitions));
    for (int i = 0; i < count; ++i) {
        Transition t;
        t.name = "t" + std::to_string(i);
        t.src = rng.pick(model.states);
        t.dst = rng.pick(model.states);
        for (int j = 0; j < dims.counters; ++j) {
            t.counter_delta.push_back(rng.range(-max_delta, max_delta));
        }
        for (int j = 0; j < dims.weights; ++j) {
            t.weight_delta.push_back(rng.range(-max_delta, max_delta));
        }
        model.transitions.push_back(std::move(t));
    }
    return model;
}

inline Config random_config(Rng& rng, const Dims& dims, const StateId& state,
                            std::int64_t bound) {
    Config c;
    c.state = state;
    for (int i = 0; i < dims.counters; ++i) c.counters.push_back(rng.range(0, bound));
    for (int i = 0; i < dims.weights; ++i) {
        c.weights.push_back(rng.range(-bound, bound));
    }
    return c;
}

inline Config random_config_in_box(Rng& rng, const Dims& dims,
                                   const oracle::Box& box,
                                   const StateId& state) {
    Config c;
    c.state = state;
    for (int i = 0; i < dims.counters; ++i) {
        c.counters.push_back(rng.range(0, box.counter_hi[i]));
    }
    for (int i = 0; i < dims.weights; ++i) {
        c.weights.push_back(rng.range(box.weight_lo[i], box.weight_hi[i]));
    }
    return c;
}

/// Box reaching `margin` beyond every finite constant of the given ideals and
/// configs (and containing 0 in every coordinate).
inline oracle::Box margin_box(const Dims& dims, std::span<const Ideal> ideals,
                              std::span<const Config> configs,
                              std::int64_t margin = 2) {
    oracle::Box box;
    box.counter_hi.assign(dims.counters, 0);
    box.weight_lo.assign(dims.weights, 0);
    box.weight_hi.assign(dims.weights, 0);
    for (const Ideal& ideal : ideals) {
        for (int i = 0; i < dims.counters; ++i) {
            const CounterLimit u = ideal.counter_limit[i];
            if (!u.is_omega()) {
                box.counter_hi[i] = std::max(box.counter_hi[i], u.value());
            }
        }
        for (int i = 0; i < dims.weights; ++i) {
            const WeightLimit m = ideal.weight_limit[i];
            if (!m.is_inf()) {
                box.weight_lo[i] = std::min(box.weight_lo[i], m.value());
                box.weight_hi[i] = std::max(box.weight_hi[i], m.value());
            }
        }
    }
    for (const Config& c : configs) {
        for (int i = 0; i < dims.counters; ++i) {
            box.counter_hi[i] = std::max(box.counter_hi[i], c.counters[i]);
        }
        for (int i = 0; i < dims.weights; ++i) {
            box.weight_lo[i] = std::min(box.weight_lo[i], c.weights[i]);
            box.weight_hi[i] = std::max(box.weight_hi[i], c.weights[i]);
        }
    }
    for (int i = 0; i < dims.counters; ++i) box.counter_hi[i] += margin;
    for (int i = 0; i < dims.weights; ++i) {
        box.weight_lo[i] -= margin;
        box.weight_hi[i] += margin;
    }
    return box;
}

inline oracle::Box margin_box_for_downsets(
    const Dims& dims, std::initializer_list<const DownSet*> sets,
    std::span<const Config> configs, std::int64_t margin = 2) {
    std::vector<Ideal> all;
    for (const DownSet* set : sets) {
        auto ideals = set->ideals();
        all.insert(all.end(), ideals.begin(), ideals.end());
    }
    return margin_box(dims, all, configs, margin);
}

/// Oracle-side membership in a union of ideals, independent of the encoded
/// inclusion rules.
inline bool oracle_downset_contains(const Dims& dims, const DownSet& set,
                                    const Config& c) {
    for (const Ideal& ideal : set.ideals()) {
        if (oracle::member_by_definition(dims, ideal, c)) return true;
    }
    return false;
}

/// All box configs (any state of `states`) that the oracle places in `set`.
inline std::vector<Config> oracle_downset_box_members(
    const Dims& dims, const DownSet& set, const std::vector<StateId>& states,
    const oracle::Box& box) {
    std::vector<Config> members;
    for (const StateId& state : states) {
        for (const Config& c : oracle::box_configs(dims, box, state)) {
            if (oracle_downset_contains(dims, set, c)) members.push_back(c);
        }
    }
    std::sort(members.begin(), members.end(), config_rep_less);
    return members;
}

/// Checks downset_post against the brute-force oracle on margin boxes: the
/// target box covers the set's constants shifted by every delta; the source
/// box widens it by the largest delta so every closure member's concrete
/// witness lies inside.
inline bool downset_post_agrees_with_oracle(const WVass& model,
                                            const DownSet& set) {
    const Dims& dims = model.dims;
    std::int64_t max_delta = 0;
    for (const Transition& t : model.transitions) {
        for (std::int64_t z : t.counter_delta) {
            max_delta = std::max(max_delta, std::abs(z));
        }
        for (std::int64_t z : t.weight_delta) {
            max_delta = std::max(max_delta, std::abs(z));
        }
    }
    oracle::Box target =
        margin_box_for_downsets(dims, {&set}, {}, 2 + max_delta);
    oracle::Box source = target;
    for (auto& hi : source.counter_hi) hi += max_delta;
    for (auto& lo : source.weight_lo) lo -= max_delta;
    for (auto& hi : source.weight_hi) hi += max_delta;

    std::vector<Config> sources;
    for (const Ideal& ideal : set.ideals()) {
        auto members = oracle::box_members(dims, ideal, source);
        sources.insert(sources.end(), members.begin(), members.end());
    }
    std::sort(sources.begin(), sources.end(), config_rep_less);
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    const std::vector<Config> brute =
        oracle::brute_post_box(model, sources, target);
    const std::vector<Config> symbolic = oracle_downset_box_members(
        dims, downset_post(model, set), model.states, target);
    return brute == symbolic;
}

} // namespace wvass::testing
