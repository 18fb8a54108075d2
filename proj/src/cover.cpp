// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/cover.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace wvass {

namespace {

// Backward-linked provenance: the transition sequence that produced an ideal,
// shared across rounds so growing it is O(1).
struct PathNode {
    std::shared_ptr<const PathNode> parent;
    std::string transition;
};

std::vector<std::string> materialize(std::shared_ptr<const PathNode> tail) {
    std::vector<std::string> path;
    for (; tail != nullptr; tail = tail->parent) {
        path.push_back(tail->transition);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// An ideal of the saturation set together with the provenance chain that
// produced it from the start config.
struct TrackedIdeal {
    Ideal ideal;
    std::shared_ptr<const PathNode> path;
};

bool tracked_less(const TrackedIdeal& a, const TrackedIdeal& b) {
    return encoding_less(a.ideal, b.ideal);
}

// Union of `current` with its one-step images, minimized. Among equal
// encodings the earliest provenance wins, so results are deterministic.
std::vector<TrackedIdeal> saturation_round(const WVass& model,
                                           const std::vector<TrackedIdeal>& current) {
    std::vector<TrackedIdeal> merged = current;
    for (const TrackedIdeal& tracked : current) {
        for (const Transition& t : model.transitions) {
            if (auto image = ideal_post(model, t, tracked.ideal)) {
                auto path = std::make_shared<const PathNode>(
                    PathNode{tracked.path, t.name});
                merged.push_back(TrackedIdeal{std::move(*image), std::move(path)});
            }
        }
    }
    std::vector<TrackedIdeal> kept;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < merged.size() && !drop; ++j) {
            if (i == j) continue;
            if (merged[i].ideal == merged[j].ideal) {
                drop = j < i;
            } else if (ideal_subseteq(model.dims, merged[i].ideal,
                                      merged[j].ideal)) {
                drop = true;
            }
        }
        if (!drop) kept.push_back(merged[i]);
    }
    std::stable_sort(kept.begin(), kept.end(), tracked_less);
    return kept;
}

DownSet to_downset(const WVass& model, const std::vector<TrackedIdeal>& tracked) {
    std::vector<Ideal> ideals;
    ideals.reserve(tracked.size());
    for (const TrackedIdeal& item : tracked) ideals.push_back(item.ideal);
    return minimize(model.dims, ideals);
}

bool same_ideals(const std::vector<TrackedIdeal>& a,
                 const std::vector<TrackedIdeal>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].ideal == b[i].ideal)) return false;
    }
    return true;
}

// First ideal containing the target, replayed into a verified witness run.
std::optional<std::pair<Run, Config>> extract_witness(
    const WVass& model, const std::vector<TrackedIdeal>& tracked,
    const Config& start, const Config& target) {
    for (const TrackedIdeal& item : tracked) {
        if (!ideal_contains(model.dims, item.ideal, target)) continue;
        Run run{start, materialize(item.path)};
        auto endpoint = replay_run(model, run);
        if (!endpoint || !config_leq(model.dims, target, *endpoint)) {
            throw std::logic_error(
                "forward_search: witness replay failed verification");
        }
        return std::make_pair(std::move(run), std::move(*endpoint));
    }
    return std::nullopt;
}

} // namespace

ForwardResult forward_search(const WVass& model, const Config& start,
                             const Config& target, std::int64_t round_cap) {
    require_conforms(model.dims, start, "forward_search");
    require_conforms(model.dims, target, "forward_search");

    std::vector<TrackedIdeal> reached{
        TrackedIdeal{principal_ideal(model.dims, start), {}}};
    if (auto witness = extract_witness(model, reached, start, target)) {
        return ForwardResult{ForwardResult::Kind::Coverable,
                             std::move(witness->first),
                             std::move(witness->second),
                             to_downset(model, reached), 0};
    }
    for (std::int64_t round = 1; round <= round_cap; ++round) {
        std::vector<TrackedIdeal> next = saturation_round(model, reached);
        if (auto witness = extract_witness(model, next, start, target)) {
            return ForwardResult{ForwardResult::Kind::Coverable,
                                 std::move(witness->first),
                                 std::move(witness->second),
                                 to_downset(model, next), round};
        }
        if (same_ideals(next, reached)) {
            return ForwardResult{ForwardResult::Kind::Fixpoint, std::nullopt,
                                 std::nullopt, to_downset(model, reached), round};
        }
        reached = std::move(next);
    }
    return ForwardResult{ForwardResult::Kind::CapExceeded, std::nullopt,
                         std::nullopt, to_downset(model, reached), round_cap};
}

bool is_inductive(const WVass& model, const DownSet& set) {
    return downset_subseteq(model.dims, downset_post(model, set), set);
}

bool check_separating_invariant(const WVass& model, const DownSet& set,
                                const Config& from, const Config& to) {
    return is_inductive(model, set) && downset_contains(model.dims, set, from) &&
           !downset_contains(model.dims, set, to);
}

namespace {
constexpr int kCandidatesPerRound = 64;
} // namespace

CoverDecision decide_cover(const WVass& model, const Config& from,
                           const Config& to, Budget budget,
                           const std::optional<DownSet>& hint) {
    require_conforms(model.dims, from, "decide_cover");
    require_conforms(model.dims, to, "decide_cover");

    CoverDecision decision;
    if (hint) {
        if (check_separating_invariant(model, *hint, from, to)) {
            decision.verdict = CoverVerdict{CoverVerdict::Kind::NotCoverable,
                                            std::nullopt, std::nullopt, *hint, 0};
            return decision;
        }
        decision.hint_rejected = true;
    }

    std::vector<TrackedIdeal> reached{
        TrackedIdeal{principal_ideal(model.dims, from), {}}};
    if (auto witness = extract_witness(model, reached, from, to)) {
        decision.verdict =
            CoverVerdict{CoverVerdict::Kind::Coverable, std::move(witness->first),
                         std::move(witness->second), std::nullopt, 0};
        return decision;
    }

    DownSetEnumerator candidates(model.dims, model.states);
    std::int64_t round = 0;
    while (budget.is_unlimited || round < budget.max_rounds) {
        ++round;

        std::vector<TrackedIdeal> next = saturation_round(model, reached);
        if (auto witness = extract_witness(model, next, from, to)) {
            decision.verdict = CoverVerdict{CoverVerdict::Kind::Coverable,
                                            std::move(witness->first),
                                            std::move(witness->second),
                                            std::nullopt, round};
            return decision;
        }
        if (same_ideals(next, reached)) {
            // The stabilized set is inductive, contains `from`, misses `to`.
            DownSet invariant = to_downset(model, reached);
            if (!check_separating_invariant(model, invariant, from, to)) {
                throw std::logic_error(
                    "decide_cover: stabilized set failed verification");
            }
            decision.verdict =
                CoverVerdict{CoverVerdict::Kind::NotCoverable, std::nullopt,
                             std::nullopt, std::move(invariant), round};
            return decision;
        }
        reached = std::move(next);

        for (int k = 0; k < kCandidatesPerRound; ++k) {
            DownSet candidate = candidates.next();
            if (check_separating_invariant(model, candidate, from, to)) {
                decision.verdict =
                    CoverVerdict{CoverVerdict::Kind::NotCoverable, std::nullopt,
                                 std::nullopt, std::move(candidate), round};
                return decision;
            }
        }
    }
    decision.verdict = CoverVerdict{CoverVerdict::Kind::Unknown, std::nullopt,
                                    std::nullopt, std::nullopt, round};
    return decision;
}

BackwardTrace backward_capped(const WVass& model, const Config& from,
                              const Config& to, std::int64_t max_steps) {
    if (max_steps < 0) {
        throw std::invalid_argument("backward_capped: negative step count");
    }
    BackwardTrace result;
    result.trace.push_back(up_of_config(model, to));
    if (upset_contains(model, result.trace.back(), from)) {
        result.outcome = BackwardTrace::Outcome::CoverableBack;
        result.stopped_at = 0;
        return result;
    }
    for (std::int64_t step = 1; step <= max_steps; ++step) {
        UpSet next = backward_step(model, result.trace.back());
        if (next == result.trace.back()) {
            result.outcome = BackwardTrace::Outcome::StabilizedNotCoverable;
            result.stopped_at = step;
            return result;
        }
        result.trace.push_back(std::move(next));
        if (upset_contains(model, result.trace.back(), from)) {
            result.outcome = BackwardTrace::Outcome::CoverableBack;
            result.stopped_at = step;
            return result;
        }
    }
    result.outcome = BackwardTrace::Outcome::Diverged;
    result.stopped_at = max_steps;
    return result;
}

} // namespace wvass
