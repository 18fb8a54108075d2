// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace wvass {

/// Control-state identifiers are plain names; the tool is desk-scale and
/// favors readable certificates over interning.
using StateId = std::string;

/// Dimension signature of a model: `counters` guarded coordinates over the
/// naturals, ordered componentwise, plus `weights` unguarded coordinates over
/// the integers, ordered lexicographically as a tie-breaker.
struct Dims {
    int counters = 0;
    int weights = 0;

    friend bool operator==(const Dims&, const Dims&) = default;

    bool valid() const {
        return counters >= 0 && weights >= 0 && counters + weights >= 1;
    }
};

} // namespace wvass
