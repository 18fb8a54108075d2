// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <span>
#include <vector>

#include "wvass/ideal.hpp"

namespace wvass {

/// A downward-closed set of configs represented canonically: per control
/// state, the finite inclusion-antichain of its maximal ideals, kept sorted
/// by encoding order. Equal values denote equal sets. A default-constructed
/// DownSet is the empty set.
class DownSet {
public:
    DownSet() = default;

    bool empty() const { return by_state_.empty(); }

    std::size_t ideal_count() const;

    /// All ideals in canonical order (state name, then encoding order).
    std::vector<Ideal> ideals() const;

    const std::map<StateId, std::vector<Ideal>>& by_state() const {
        return by_state_;
    }

    friend bool operator==(const DownSet&, const DownSet&) = default;

private:
    friend DownSet minimize(const Dims&, std::span<const Ideal>);
    std::map<StateId, std::vector<Ideal>> by_state_;
};

/// Canonicalizes a finite union of ideals: groups by control state, drops
/// duplicates and every ideal included in another, and sorts. The result is
/// the antichain of inclusion-maximal inputs; the denotation is preserved.
DownSet minimize(const Dims& dims, std::span<const Ideal> ideals);

/// Canonical union of two downward-closed sets.
DownSet downset_union(const Dims& dims, const DownSet& a, const DownSet& b);

/// Decides denotation(inner) ⊆ denotation(outer). Because ideals are
/// directed, an ideal lies in a finite union exactly when it lies in one of
/// the members, so inclusion reduces to a per-ideal check.
bool downset_subseteq(const Dims& dims, const DownSet& inner,
                      const DownSet& outer);

/// Membership; equivalent to downset_subseteq of the principal ideal.
bool downset_contains(const Dims& dims, const DownSet& set, const Config& c);

/// Smallest bound whose enumeration tier contains this set: the maximum over
/// per-state ideal counts, finite counter limits and magnitudes of finite
/// weight limits, and at least 1.
std::int64_t representation_bound(const DownSet& set);

} // namespace wvass
