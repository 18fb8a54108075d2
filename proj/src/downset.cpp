// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/downset.hpp"

#include <algorithm>
#include <cstdlib>

namespace wvass {

std::size_t DownSet::ideal_count() const {
    std::size_t n = 0;
    for (const auto& [state, ideals] : by_state_) n += ideals.size();
    return n;
}

std::vector<Ideal> DownSet::ideals() const {
    std::vector<Ideal> out;
    out.reserve(ideal_count());
    for (const auto& [state, ideals] : by_state_) {
        out.insert(out.end(), ideals.begin(), ideals.end());
    }
    return out;
}

DownSet minimize(const Dims& dims, std::span<const Ideal> ideals) {
    std::map<StateId, std::vector<Ideal>> grouped;
    for (const Ideal& ideal : ideals) {
        require_conforms(dims, ideal, "minimize");
        grouped[ideal.state].push_back(ideal);
    }
    DownSet result;
    for (auto& [state, group] : grouped) {
        std::vector<Ideal> kept;
        for (std::size_t i = 0; i < group.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < group.size() && !drop; ++j) {
                if (i == j) continue;
                if (group[i] == group[j]) {
                    drop = j < i; // keep the first among equal encodings
                } else if (ideal_subseteq(dims, group[i], group[j])) {
                    drop = true;
                }
            }
            if (!drop) kept.push_back(group[i]);
        }
        std::sort(kept.begin(), kept.end(), encoding_less);
        if (!kept.empty()) result.by_state_[state] = std::move(kept);
    }
    return result;
}

DownSet downset_union(const Dims& dims, const DownSet& a, const DownSet& b) {
    std::vector<Ideal> all = a.ideals();
    std::vector<Ideal> bs = b.ideals();
    all.insert(all.end(), bs.begin(), bs.end());
    return minimize(dims, all);
}

bool downset_subseteq(const Dims& dims, const DownSet& inner,
                      const DownSet& outer) {
    for (const auto& [state, ideals] : inner.by_state()) {
        auto it = outer.by_state().find(state);
        if (it == outer.by_state().end()) return false;
        for (const Ideal& ideal : ideals) {
            const bool covered = std::any_of(
                it->second.begin(), it->second.end(), [&](const Ideal& outer_ideal) {
                    return ideal_subseteq(dims, ideal, outer_ideal);
                });
            if (!covered) return false;
        }
    }
    return true;
}

bool downset_contains(const Dims& dims, const DownSet& set, const Config& c) {
    require_conforms(dims, c, "downset_contains");
    auto it = set.by_state().find(c.state);
    if (it == set.by_state().end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const Ideal& ideal) {
                           return ideal_contains(dims, ideal, c);
                       });
}

std::int64_t representation_bound(const DownSet& set) {
    std::int64_t bound = 1;
    for (const auto& [state, ideals] : set.by_state()) {
        bound = std::max(bound, static_cast<std::int64_t>(ideals.size()));
        for (const Ideal& ideal : ideals) {
            for (CounterLimit u : ideal.counter_limit) {
                if (!u.is_omega()) bound = std::max(bound, u.value());
            }
            for (WeightLimit m : ideal.weight_limit) {
                if (!m.is_inf()) bound = std::max(bound, std::abs(m.value()));
            }
        }
    }
    return bound;
}

} // namespace wvass
