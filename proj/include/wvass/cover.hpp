// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "wvass/downset.hpp"
#include "wvass/enumerate.hpp"
#include "wvass/model.hpp"
#include "wvass/symbolic.hpp"

namespace wvass {

/// Result of the forward saturation search: it keeps closing the start
/// config's downward closure under Post until the target appears, the set
/// stabilizes, or the round cap runs out.
struct ForwardResult {
    enum class Kind { Coverable, Fixpoint, CapExceeded };
    Kind kind;
    std::optional<Run> run;        // Coverable: a replayable witness
    std::optional<Config> endpoint; // Coverable: its replayed endpoint
    DownSet reached;                // the final saturation set
    std::int64_t rounds = 0;
};

/// Runs the forward saturation from ↓start. Each ideal carries the
/// transition sequence that produced it, so a positive answer comes with a
/// concrete run; the sequence replays validly because saturation starts from
/// a concrete config and keeps every limit finite. When a round changes
/// nothing and the target is absent, the reached set is itself an inductive
/// invariant separating start from target.
ForwardResult forward_search(const WVass& model, const Config& start,
                             const Config& target, std::int64_t round_cap);

/// Whether the set absorbs its own Post-closure.
bool is_inductive(const WVass& model, const DownSet& set);

/// Whether the set is an inductive invariant containing `from` and excluding
/// `to` — a machine-checkable certificate of non-coverability.
bool check_separating_invariant(const WVass& model, const DownSet& set,
                                const Config& from, const Config& to);

struct Budget {
    static Budget unlimited() { return Budget{true, 0}; }
    static Budget rounds(std::int64_t n) { return Budget{false, n}; }
    bool is_unlimited = false;
    std::int64_t max_rounds = 0;
};

struct CoverVerdict {
    enum class Kind { Coverable, NotCoverable, Unknown };
    Kind kind;
    std::optional<Run> run;          // Coverable
    std::optional<Config> endpoint;  // Coverable
    std::optional<DownSet> invariant; // NotCoverable
    std::int64_t rounds = 0;          // dovetail rounds executed
};

struct CoverDecision {
    CoverVerdict verdict;
    bool hint_rejected = false;
};

/// Decides coverability by dovetailing the forward saturation with an
/// enumeration of candidate invariants: per round, one saturation step, then
/// the next 64 candidates checked as separating invariants. A valid hint
/// short-circuits the search; an invalid one is flagged and ignored. Both
/// certificate kinds are re-verified before being returned. With an
/// unlimited budget the dovetail terminates on every input.
CoverDecision decide_cover(const WVass& model, const Config& from,
                           const Config& to, Budget budget,
                           const std::optional<DownSet>& hint = std::nullopt);

/// Trace of the backward iteration on counter-free models: the per-state
/// minima of the growing up-closure of the target's predecessors.
struct BackwardTrace {
    enum class Outcome { CoverableBack, StabilizedNotCoverable, Diverged };
    Outcome outcome;
    std::vector<UpSet> trace; // one entry per distinct iteration, first = ↑to
    std::int64_t stopped_at = 0; // step index of the decisive event
};

/// Iterates backward_step from ↑to at most `max_steps` times, reporting when
/// `from` enters the up-set, when the iteration stabilizes without reaching
/// it, or that it kept growing for the whole allowance.
BackwardTrace backward_capped(const WVass& model, const Config& from,
                              const Config& to, std::int64_t max_steps);

} // namespace wvass
