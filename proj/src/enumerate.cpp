// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/enumerate.hpp"

#include <optional>
#include <stdexcept>

namespace wvass {

namespace {

// A state-independent ideal encoding: the pair of limit vectors.
struct Pattern {
    std::vector<CounterLimit> u;
    std::vector<WeightLimit> m;
};

Ideal attach_state(const Pattern& p, const StateId& state) {
    return Ideal{state, p.u, p.m};
}

// All patterns whose finite constants fit the bound, in encoding order:
// counter limits vary entrywise (omega first, then 0..bound) with the first
// coordinate most significant; for each counter part, weight limits by
// ascending finite-prefix length, prefixes in lexicographic order.
std::vector<Pattern> build_pool(const Dims& dims, std::int64_t bound) {
    std::vector<Pattern> pool;

    std::vector<std::vector<WeightLimit>> finite_u_weight_options;
    {
        const int w = dims.weights;
        for (int prefix = 0; prefix <= w; ++prefix) {
            std::vector<std::int64_t> digits(prefix, -bound);
            while (true) {
                std::vector<WeightLimit> m;
                m.reserve(w);
                for (int i = 0; i < prefix; ++i)
                    m.push_back(WeightLimit::finite(digits[i]));
                for (int i = prefix; i < w; ++i)
                    m.push_back(WeightLimit::plus_inf());
                finite_u_weight_options.push_back(std::move(m));
                int pos = prefix - 1;
                while (pos >= 0 && digits[pos] == bound) digits[pos--] = -bound;
                if (pos < 0) break;
                ++digits[pos];
            }
        }
    }

    std::vector<CounterLimit> u_digits;
    u_digits.reserve(bound + 2);
    u_digits.push_back(CounterLimit::omega());
    for (std::int64_t n = 0; n <= bound; ++n)
        u_digits.push_back(CounterLimit::finite(n));

    std::vector<std::size_t> odo(dims.counters, 0);
    while (true) {
        std::vector<CounterLimit> u;
        u.reserve(dims.counters);
        bool has_omega = false;
        for (int i = 0; i < dims.counters; ++i) {
            u.push_back(u_digits[odo[i]]);
            has_omega = has_omega || u.back().is_omega();
        }
        if (has_omega) {
            pool.push_back(Pattern{
                u, std::vector<WeightLimit>(dims.weights, WeightLimit::plus_inf())});
        } else {
            for (const auto& m : finite_u_weight_options)
                pool.push_back(Pattern{u, m});
        }
        int pos = dims.counters - 1;
        while (pos >= 0 && odo[pos] + 1 == u_digits.size()) odo[pos--] = 0;
        if (pos < 0) break;
        ++odo[pos];
    }
    return pool;
}

// Enumerates antichain subsets of the pool (by index, ascending) in preorder:
// the empty set first, then each subset immediately followed by its
// extensions. Size capped at `max_size`. Restartable and O(max_size) state.
// Extension candidates come from per-pattern incomparability adjacency, so a
// pool whose patterns are pairwise comparable walks its singletons in O(1)
// per step.
class FamilyCursor {
public:
    FamilyCursor(const std::vector<std::vector<bool>>* incomparable,
                 const std::vector<std::vector<std::size_t>>* adjacency,
                 std::size_t pool_size, std::size_t max_size)
        : incomparable_(incomparable), adjacency_(adjacency),
          pool_size_(pool_size), max_size_(max_size) {}

    std::optional<std::vector<std::size_t>> next() {
        if (!emitted_empty_) {
            emitted_empty_ = true;
            return std::vector<std::size_t>{};
        }
        const std::size_t child_from = chosen_.empty() ? 0 : chosen_.back() + 1;
        if (push_first_from(child_from)) return chosen_;
        while (!chosen_.empty()) {
            const std::size_t last = chosen_.back();
            chosen_.pop_back();
            if (push_first_from(last + 1)) return chosen_;
        }
        return std::nullopt;
    }

private:
    // Extends the current antichain with the smallest compatible index at or
    // above `min_index`; false when none exists or the size cap is reached.
    bool push_first_from(std::size_t min_index) {
        if (chosen_.size() >= max_size_) return false;
        if (chosen_.empty()) {
            if (min_index >= pool_size_) return false;
            chosen_.push_back(min_index);
            return true;
        }
        for (std::size_t j : (*adjacency_)[chosen_.back()]) {
            if (j < min_index) continue;
            if (compatible(j)) {
                chosen_.push_back(j);
                return true;
            }
        }
        return false;
    }

    bool compatible(std::size_t j) const {
        for (std::size_t i : chosen_) {
            if (!(*incomparable_)[i][j]) return false;
        }
        return true;
    }

    const std::vector<std::vector<bool>>* incomparable_;
    const std::vector<std::vector<std::size_t>>* adjacency_;
    std::size_t pool_size_;
    std::size_t max_size_;
    std::vector<std::size_t> chosen_;
    bool emitted_empty_ = false;
};

} // namespace

struct DownSetEnumerator::Impl {
    Dims dims;
    std::vector<StateId> states;
    std::int64_t bound = 0;

    std::vector<Pattern> pool;
    std::vector<std::int64_t> magnitude; // largest finite constant per pattern
    std::vector<std::vector<bool>> incomparable;
    std::vector<std::vector<std::size_t>> adjacency; // incomparable partners
    std::vector<FamilyCursor> cursors;
    std::vector<std::vector<std::size_t>> picks; // family per state
    bool tier_open = false;

    void open_tier(std::int64_t b) {
        bound = b;
        pool = build_pool(dims, bound);
        magnitude.resize(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            std::int64_t mag = 0;
            for (CounterLimit u : pool[i].u) {
                if (!u.is_omega()) mag = std::max(mag, u.value());
            }
            for (WeightLimit m : pool[i].m) {
                if (!m.is_inf()) mag = std::max(mag, std::abs(m.value()));
            }
            magnitude[i] = mag;
        }
        // Without counters the extended lexicographic order is total, so the
        // pool is a chain: no pair is incomparable and antichains are
        // singletons. Only guarded dimensions need the pairwise comparison.
        if (dims.counters == 0) {
            incomparable.assign(pool.size(), {});
            adjacency.assign(pool.size(), {});
        } else {
            incomparable.assign(pool.size(),
                                std::vector<bool>(pool.size(), false));
            for (std::size_t i = 0; i < pool.size(); ++i) {
                const Ideal a = attach_state(pool[i], "s");
                for (std::size_t j = i + 1; j < pool.size(); ++j) {
                    const Ideal b2 = attach_state(pool[j], "s");
                    const bool cmp = ideal_subseteq(dims, a, b2) ||
                                     ideal_subseteq(dims, b2, a);
                    incomparable[i][j] = !cmp;
                    incomparable[j][i] = !cmp;
                }
            }
            adjacency.assign(pool.size(), {});
            for (std::size_t i = 0; i < pool.size(); ++i) {
                for (std::size_t j = 0; j < pool.size(); ++j) {
                    if (incomparable[i][j]) adjacency[i].push_back(j);
                }
            }
        }
        cursors.assign(states.size(),
                       FamilyCursor(&incomparable, &adjacency, pool.size(),
                                    static_cast<std::size_t>(bound)));
        picks.resize(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) {
            picks[s] = *cursors[s].next(); // first family is always {}
        }
        tier_open = true;
    }

    // representation_bound of the current combination, without building it:
    // per-state picks are antichains already, so nothing minimizes away.
    std::int64_t quick_bound() const {
        std::int64_t b = 1;
        for (const auto& family : picks) {
            b = std::max(b, static_cast<std::int64_t>(family.size()));
            for (std::size_t idx : family) b = std::max(b, magnitude[idx]);
        }
        return b;
    }

    // Moves `picks` to the next combination; false when the tier wraps.
    bool advance() {
        for (std::size_t s = states.size(); s-- > 0;) {
            if (auto fam = cursors[s].next()) {
                picks[s] = std::move(*fam);
                return true;
            }
            cursors[s] = FamilyCursor(&incomparable, &adjacency, pool.size(),
                                      static_cast<std::size_t>(bound));
            picks[s] = *cursors[s].next();
        }
        return false;
    }

    DownSet current() const {
        std::vector<Ideal> ideals;
        for (std::size_t s = 0; s < states.size(); ++s) {
            for (std::size_t idx : picks[s]) {
                ideals.push_back(attach_state(pool[idx], states[s]));
            }
        }
        return minimize(dims, ideals);
    }
};

DownSetEnumerator::DownSetEnumerator(Dims dims, std::vector<StateId> states)
    : impl_(std::make_unique<Impl>()) {
    if (!dims.valid()) {
        throw std::invalid_argument("DownSetEnumerator: invalid dimensions");
    }
    if (states.empty()) {
        throw std::invalid_argument("DownSetEnumerator: no control states");
    }
    impl_->dims = dims;
    impl_->states = std::move(states);
}

DownSetEnumerator::~DownSetEnumerator() = default;
DownSetEnumerator::DownSetEnumerator(DownSetEnumerator&&) noexcept = default;
DownSetEnumerator& DownSetEnumerator::operator=(DownSetEnumerator&&) noexcept =
    default;

DownSet DownSetEnumerator::next() {
    // TODO: stop re-walking lower-tier combinations once the bound grows
    // large; emitting only combinations that touch a fresh pattern would cut
    // a tier's walk from O(pool^states) to the number of new sets.
    while (true) {
        if (!impl_->tier_open) {
            impl_->open_tier(impl_->bound + 1);
        } else if (!impl_->advance()) {
            impl_->tier_open = false;
            continue;
        }
        if (impl_->quick_bound() == impl_->bound) {
            return impl_->current();
        }
    }
}

std::int64_t DownSetEnumerator::current_bound() const { return impl_->bound; }

std::vector<DownSet> enumerate_downsets(const Dims& dims,
                                        const std::vector<StateId>& states,
                                        std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("enumerate_downsets: bound < 1");
    if (states.empty()) return {DownSet{}};
    DownSetEnumerator stream(dims, states);
    std::vector<DownSet> out;
    while (true) {
        DownSet candidate = stream.next();
        if (stream.current_bound() > bound) break;
        out.push_back(std::move(candidate));
    }
    return out;
}

} // namespace wvass
