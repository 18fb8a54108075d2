// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace wvass {

Ideal Ideal::canonical(StateId state, std::vector<CounterLimit> u,
                       std::vector<WeightLimit> m) {
    const bool any_omega =
        std::any_of(u.begin(), u.end(),
                    [](CounterLimit l) { return l.is_omega(); });
    if (any_omega) {
        std::fill(m.begin(), m.end(), WeightLimit::plus_inf());
    } else {
        // Everything from the first +inf on is unconstrained.
        auto first_inf = std::find_if(m.begin(), m.end(),
                                      [](WeightLimit l) { return l.is_inf(); });
        std::fill(first_inf, m.end(), WeightLimit::plus_inf());
    }
    return Ideal{std::move(state), std::move(u), std::move(m)};
}

bool conforms(const Dims& dims, const Ideal& ideal) {
    return static_cast<int>(ideal.counter_limit.size()) == dims.counters &&
           static_cast<int>(ideal.weight_limit.size()) == dims.weights;
}

void require_conforms(const Dims& dims, const Ideal& ideal, const char* what) {
    if (!conforms(dims, ideal)) {
        throw std::invalid_argument(std::string(what) +
                                    ": ideal does not conform to dimensions");
    }
}

bool is_canonical(const Ideal& ideal) {
    const bool any_omega = std::any_of(
        ideal.counter_limit.begin(), ideal.counter_limit.end(),
        [](CounterLimit l) { return l.is_omega(); });
    bool seen_inf = false;
    for (const WeightLimit& l : ideal.weight_limit) {
        if (l.is_inf()) {
            seen_inf = true;
        } else if (seen_inf) {
            return false; // finite entry after a +inf entry
        }
    }
    if (any_omega) {
        return std::all_of(ideal.weight_limit.begin(), ideal.weight_limit.end(),
                           [](WeightLimit l) { return l.is_inf(); });
    }
    return true;
}

bool lex_leq_ext(const std::vector<WeightLimit>& a,
                 const std::vector<WeightLimit>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = limit_cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return true;
}

Ideal principal_ideal(const Dims& dims, const Config& c) {
    require_conforms(dims, c, "principal_ideal");
    std::vector<CounterLimit> u;
    u.reserve(c.counters.size());
    for (std::int64_t n : c.counters) u.push_back(CounterLimit::finite(n));
    std::vector<WeightLimit> m;
    m.reserve(c.weights.size());
    for (std::int64_t z : c.weights) m.push_back(WeightLimit::finite(z));
    return Ideal{c.state, std::move(u), std::move(m)};
}

bool ideal_contains(const Dims& dims, const Ideal& ideal, const Config& c) {
    require_conforms(dims, ideal, "ideal_contains");
    require_conforms(dims, c, "ideal_contains");
    if (ideal.state != c.state) return false;
    bool at_limit = true;
    for (int i = 0; i < dims.counters; ++i) {
        const CounterLimit u = ideal.counter_limit[i];
        if (u.is_omega()) {
            at_limit = false;
            continue;
        }
        if (c.counters[i] > u.value()) return false;
        if (c.counters[i] != u.value()) at_limit = false;
    }
    if (!at_limit) return true;
    std::vector<WeightLimit> v;
    v.reserve(c.weights.size());
    for (std::int64_t z : c.weights) v.push_back(WeightLimit::finite(z));
    return lex_leq_ext(v, ideal.weight_limit);
}

bool ideal_subseteq(const Dims& dims, const Ideal& inner, const Ideal& outer) {
    require_conforms(dims, inner, "ideal_subseteq");
    require_conforms(dims, outer, "ideal_subseteq");
    if (inner.state != outer.state) return false;
    bool counters_eq = true;
    for (int i = 0; i < dims.counters; ++i) {
        if (!limit_leq(inner.counter_limit[i], outer.counter_limit[i])) {
            return false;
        }
        if (inner.counter_limit[i] != outer.counter_limit[i]) {
            counters_eq = false;
        }
    }
    // Strictly below on the counter limits: every member of `inner` stays
    // strictly below the outer limits, so its weights are unconstrained.
    if (!counters_eq) return true;
    return lex_leq_ext(inner.weight_limit, outer.weight_limit);
}

namespace {

// omega first, then naturals ascending
int counter_limit_key_cmp(CounterLimit a, CounterLimit b) {
    if (a.is_omega() && b.is_omega()) return 0;
    if (a.is_omega()) return -1;
    if (b.is_omega()) return 1;
    if (a.value() < b.value()) return -1;
    if (a.value() > b.value()) return 1;
    return 0;
}

std::size_t finite_prefix_len(const std::vector<WeightLimit>& m) {
    std::size_t k = 0;
    while (k < m.size() && !m[k].is_inf()) ++k;
    return k;
}

} // namespace

bool encoding_less(const Ideal& a, const Ideal& b) {
    if (a.state != b.state) return a.state < b.state;
    for (std::size_t i = 0; i < a.counter_limit.size(); ++i) {
        const int c = counter_limit_key_cmp(a.counter_limit[i], b.counter_limit[i]);
        if (c != 0) return c < 0;
    }
    const std::size_t ka = finite_prefix_len(a.weight_limit);
    const std::size_t kb = finite_prefix_len(b.weight_limit);
    if (ka != kb) return ka < kb;
    for (std::size_t i = 0; i < ka; ++i) {
        if (a.weight_limit[i] != b.weight_limit[i]) {
            return a.weight_limit[i].value() < b.weight_limit[i].value();
        }
    }
    return false;
}

} // namespace wvass
