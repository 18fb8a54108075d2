// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace wvass {

/// Entry of a counter-limit vector: a natural number or omega, which sits
/// above every natural.
class CounterLimit {
public:
    static CounterLimit omega() { return CounterLimit(kOmega); }

    static CounterLimit finite(std::int64_t n) {
        assert(n >= 0);
        return CounterLimit(n);
    }

    bool is_omega() const { return raw_ == kOmega; }

    std::int64_t value() const {
        assert(!is_omega());
        return raw_;
    }

    friend bool operator==(const CounterLimit&, const CounterLimit&) = default;

private:
    explicit CounterLimit(std::int64_t raw) : raw_(raw) {}
    static constexpr std::int64_t kOmega = -1;
    std::int64_t raw_;
};

/// a <= b with omega as the top element.
inline bool limit_leq(CounterLimit a, CounterLimit b) {
    if (b.is_omega()) return true;
    if (a.is_omega()) return false;
    return a.value() <= b.value();
}

/// Entry of a weight-limit vector: an integer or +inf, which sits above
/// every integer.
class WeightLimit {
public:
    static WeightLimit plus_inf() { return WeightLimit(kPlusInf); }

    static WeightLimit finite(std::int64_t z) {
        assert(z != kPlusInf);
        return WeightLimit(z);
    }

    bool is_inf() const { return raw_ == kPlusInf; }

    std::int64_t value() const {
        assert(!is_inf());
        return raw_;
    }

    friend bool operator==(const WeightLimit&, const WeightLimit&) = default;

private:
    explicit WeightLimit(std::int64_t raw) : raw_(raw) {}
    static constexpr std::int64_t kPlusInf =
        std::numeric_limits<std::int64_t>::max();
    std::int64_t raw_;
};

/// Three-way comparison with +inf on top: negative, zero or positive as
/// a <, = or > b.
inline int limit_cmp(WeightLimit a, WeightLimit b) {
    if (a.is_inf() && b.is_inf()) return 0;
    if (a.is_inf()) return 1;
    if (b.is_inf()) return -1;
    if (a.value() < b.value()) return -1;
    if (a.value() > b.value()) return 1;
    return 0;
}

} // namespace wvass
