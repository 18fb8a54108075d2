// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wvass/dims.hpp"

namespace wvass {

/// A concrete state of a weighted VASS: a control state, a vector of
/// nonnegative counter values and a vector of integer weights.
struct Config {
    StateId state;
    std::vector<std::int64_t> counters;
    std::vector<std::int64_t> weights;

    friend bool operator==(const Config&, const Config&) = default;
};

/// Lengths match and counters are nonnegative.
bool conforms(const Dims& dims, const Config& c);

/// Throws std::invalid_argument when `c` does not conform to `dims`.
void require_conforms(const Dims& dims, const Config& c, const char* what);

/// Lexicographic order on integer vectors of equal length: the first
/// differing coordinate decides; equal vectors compare as equal.
bool lex_leq(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// The composite ordering on configurations: equal control state, and either
/// the counter part strictly below componentwise, or counter parts equal and
/// the weight part lexicographically below. Total per state when there are
/// no counters; the plain componentwise order when there are no weights.
bool config_leq(const Dims& dims, const Config& a, const Config& b);

/// Arbitrary total order used to keep containers of configs deterministic.
/// Unrelated to config_leq.
bool config_rep_less(const Config& a, const Config& b);

} // namespace wvass
