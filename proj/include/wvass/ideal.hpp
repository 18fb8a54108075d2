// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wvass/config.hpp"
#include "wvass/dims.hpp"
#include "wvass/limits.hpp"

namespace wvass {

/// Symbolic encoding of one ideal (a directed downward-closed set) of the
/// composite ordering. The encoding is a limit point: a counter-limit vector
/// over N ∪ {omega} and a weight-limit vector over Z ∪ {+inf}.
///
/// Denotation: all configs (q, x, v) with x below the counter limits, where a
/// config that reaches the counter limits exactly must additionally have its
/// weight vector lexicographically below the weight limits.
///
/// Canonical form: the +inf entries of the weight limits form a suffix, and
/// if any counter limit is omega the weight limits are all +inf. Both rules
/// are denotation-preserving and make encodings unique, so equal encodings
/// mean equal sets.
struct Ideal {
    StateId state;
    std::vector<CounterLimit> counter_limit;
    std::vector<WeightLimit> weight_limit;

    friend bool operator==(const Ideal&, const Ideal&) = default;

    /// Builds an ideal in canonical form from arbitrary limit vectors.
    static Ideal canonical(StateId state, std::vector<CounterLimit> u,
                           std::vector<WeightLimit> m);
};

bool conforms(const Dims& dims, const Ideal& ideal);
void require_conforms(const Dims& dims, const Ideal& ideal, const char* what);

/// Checks the canonical-form invariants above.
bool is_canonical(const Ideal& ideal);

/// Lexicographic order on weight-limit vectors with +inf on top.
bool lex_leq_ext(const std::vector<WeightLimit>& a,
                 const std::vector<WeightLimit>& b);

/// The downward closure of a single config; its encoding is the config
/// itself, with no limit entries.
Ideal principal_ideal(const Dims& dims, const Config& c);

/// Membership of a config in the denotation.
bool ideal_contains(const Dims& dims, const Ideal& ideal, const Config& c);

/// Decides denotation(inner) ⊆ denotation(outer) by comparing limit points:
/// same state, counter limits below componentwise, and when the counter
/// limits coincide the weight limits must compare lexicographically.
bool ideal_subseteq(const Dims& dims, const Ideal& inner, const Ideal& outer);

/// Total order on canonical encodings, used for canonical container order and
/// for the enumeration order. Counter limits compare entrywise with omega
/// first; weight limits compare by finite-prefix length, then by prefix.
bool encoding_less(const Ideal& a, const Ideal& b);

} // namespace wvass
