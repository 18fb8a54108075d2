// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace wvass {

bool conforms(const Dims& dims, const Config& c) {
    if (static_cast<int>(c.counters.size()) != dims.counters) return false;
    if (static_cast<int>(c.weights.size()) != dims.weights) return false;
    return std::all_of(c.counters.begin(), c.counters.end(),
                       [](std::int64_t n) { return n >= 0; });
}

void require_conforms(const Dims& dims, const Config& c, const char* what) {
    if (!conforms(dims, c)) {
        throw std::invalid_argument(std::string(what) +
                                    ": config does not conform to dimensions");
    }
}

bool lex_leq(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return true;
}

bool config_leq(const Dims& dims, const Config& a, const Config& b) {
    require_conforms(dims, a, "config_leq");
    require_conforms(dims, b, "config_leq");
    if (a.state != b.state) return false;
    bool counters_leq = true;
    bool counters_eq = true;
    for (int i = 0; i < dims.counters; ++i) {
        if (a.counters[i] > b.counters[i]) counters_leq = false;
        if (a.counters[i] != b.counters[i]) counters_eq = false;
    }
    if (counters_eq) return lex_leq(a.weights, b.weights);
    return counters_leq;
}

bool config_rep_less(const Config& a, const Config& b) {
    if (a.state != b.state) return a.state < b.state;
    if (a.counters != b.counters) return a.counters < b.counters;
    return a.weights < b.weights;
}

} // namespace wvass
