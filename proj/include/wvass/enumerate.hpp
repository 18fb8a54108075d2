// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wvass/downset.hpp"

namespace wvass {

/// Streams every canonical DownSet over the given control states, in a fixed
/// deterministic order, without duplicates.
///
/// The stream is organized in tiers by representation bound B = 1, 2, ...; a
/// set is emitted in the tier equal to its representation_bound, so each set
/// appears exactly once. Within a tier, candidate ideals are ordered by
/// encoding order (counter limits bounded by B with omega allowed, finite
/// weight limits bounded by B in magnitude, any +inf suffix); per-state
/// antichains are enumerated in preorder over ascending candidate indices
/// with at most B ideals per state; states combine odometer-style with the
/// last declared state varying fastest.
class DownSetEnumerator {
public:
    DownSetEnumerator(Dims dims, std::vector<StateId> states);
    ~DownSetEnumerator();
    DownSetEnumerator(DownSetEnumerator&&) noexcept;
    DownSetEnumerator& operator=(DownSetEnumerator&&) noexcept;

    /// Next candidate; never exhausts.
    DownSet next();

    /// Tier of the element most recently returned by next().
    std::int64_t current_bound() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// All canonical DownSets whose representation fits the bound: at most
/// `bound` ideals per state, counter limits in {0..bound} ∪ {omega}, finite
/// weight limits within ±bound. Returned in stream order, so the sequence
/// for bound B-1 is a prefix of the sequence for bound B.
std::vector<DownSet> enumerate_downsets(const Dims& dims,
                                        const std::vector<StateId>& states,
                                        std::int64_t bound);

} // namespace wvass
