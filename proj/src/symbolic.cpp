// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/symbolic.hpp"

#include "wvass/errors.hpp"

namespace wvass {

std::optional<Ideal> ideal_post(const WVass& model, const Transition& t,
                                const Ideal& ideal) {
    require_conforms(model.dims, ideal, "ideal_post");
    if (t.src != ideal.state) return std::nullopt;
    std::vector<CounterLimit> u;
    u.reserve(ideal.counter_limit.size());
    for (std::size_t i = 0; i < ideal.counter_limit.size(); ++i) {
        const CounterLimit limit = ideal.counter_limit[i];
        if (limit.is_omega()) {
            u.push_back(limit);
            continue;
        }
        const std::int64_t shifted = limit.value() + t.counter_delta[i];
        if (shifted < 0) return std::nullopt; // no member passes the guard
        u.push_back(CounterLimit::finite(shifted));
    }
    std::vector<WeightLimit> m;
    m.reserve(ideal.weight_limit.size());
    for (std::size_t i = 0; i < ideal.weight_limit.size(); ++i) {
        const WeightLimit limit = ideal.weight_limit[i];
        m.push_back(limit.is_inf()
                        ? limit
                        : WeightLimit::finite(limit.value() + t.weight_delta[i]));
    }
    return Ideal::canonical(t.dst, std::move(u), std::move(m));
}

DownSet downset_post(const WVass& model, const DownSet& set) {
    std::vector<Ideal> images;
    for (const Ideal& ideal : set.ideals()) {
        for (const Transition& t : model.transitions) {
            if (auto image = ideal_post(model, t, ideal)) {
                images.push_back(std::move(*image));
            }
        }
    }
    return minimize(model.dims, images);
}

namespace {

void require_counter_free(const WVass& model, const char* what) {
    if (model.dims.counters != 0) {
        throw UnsupportedModelError(
            std::string(what) +
            ": only supported for models without guarded counters (d = 0)");
    }
}

} // namespace

UpSet up_of_config(const WVass& model, const Config& c) {
    require_counter_free(model, "up_of_config");
    require_conforms(model.dims, c, "up_of_config");
    UpSet set;
    set.lex_min[c.state] = c.weights;
    return set;
}

bool upset_contains(const WVass& model, const UpSet& set, const Config& c) {
    require_counter_free(model, "upset_contains");
    require_conforms(model.dims, c, "upset_contains");
    auto it = set.lex_min.find(c.state);
    if (it == set.lex_min.end()) return false;
    return lex_leq(it->second, c.weights);
}

UpSet backward_step(const WVass& model, const UpSet& set) {
    require_counter_free(model, "backward_step");
    UpSet result = set;
    for (const Transition& t : model.transitions) {
        auto it = set.lex_min.find(t.dst);
        if (it == set.lex_min.end()) continue;
        std::vector<std::int64_t> candidate(it->second);
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            candidate[i] -= t.weight_delta[i];
        }
        auto [slot, inserted] = result.lex_min.try_emplace(t.src, candidate);
        if (!inserted && lex_leq(candidate, slot->second) &&
            candidate != slot->second) {
            slot->second = std::move(candidate);
        }
    }
    return result;
}

} // namespace wvass
