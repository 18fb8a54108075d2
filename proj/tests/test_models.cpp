// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "wvass/errors.hpp"
#include "wvass/symbolic.hpp"

using namespace wvass;
using wvass::testing::Rng;

namespace {

Config cfg(StateId q, std::vector<std::int64_t> counters,
           std::vector<std::int64_t> weights) {
    return Config{std::move(q), std::move(counters), std::move(weights)};
}

CounterLimit nat(std::int64_t n) { return CounterLimit::finite(n); }
WeightLimit wt(std::int64_t z) { return WeightLimit::finite(z); }

Ideal ideal(StateId q, std::vector<CounterLimit> u, std::vector<WeightLimit> m) {
    return Ideal::canonical(std::move(q), std::move(u), std::move(m));
}

// One state, one transition adding (0,1) to the weights.
WVass loop_model() {
    WVass model;
    model.dims = Dims{0, 2};
    model.states = {"q"};
    model.transitions = {Transition{"t", "q", "q", {}, {0, 1}}};
    return model;
}

} // namespace

TEST_CASE("validate accepts the loop model and reports violations") {
    CHECK(validate(loop_model()).empty());

    WVass bad = loop_model();
    bad.transitions[0].counter_delta = {1}; // d is 0
    CHECK(validate(bad).size() == 1);

    WVass dup = loop_model();
    dup.transitions.push_back(dup.transitions[0]);
    const auto errors = validate(dup);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("declared twice") != std::string::npos);

    WVass stray = loop_model();
    stray.transitions[0].dst = "r";
    CHECK(!validate(stray).empty());
}

TEST_CASE("post_configs follows the step semantics") {
    const WVass model = loop_model();
    const auto steps = post_configs(model, cfg("q", {}, {0, 0}));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].transition == "t");
    CHECK(steps[0].target == cfg("q", {}, {0, 1}));

    WVass guarded;
    guarded.dims = Dims{1, 0};
    guarded.states = {"q"};
    guarded.transitions = {Transition{"down", "q", "q", {-1}, {}}};
    CHECK(post_configs(guarded, cfg("q", {0}, {})).empty());
    const auto enabled = post_configs(guarded, cfg("q", {1}, {}));
    REQUIRE(enabled.size() == 1);
    CHECK(enabled[0].target == cfg("q", {0}, {}));

    guarded.transitions.push_back(Transition{"up", "q", "q", {2}, {}});
    const auto both = post_configs(guarded, cfg("q", {1}, {}));
    REQUIRE(both.size() == 2);
    CHECK(both[0].transition == "down");
    CHECK(both[1].transition == "up");
}

TEST_CASE("post_configs successors always satisfy the guard") {
    Rng rng(2001);
    for (int iter = 0; iter < 200; ++iter) {
        const Dims dims = testing::random_dims(rng);
        const WVass model = testing::random_model(rng, dims, 3, 4, 3);
        const Config c =
            testing::random_config(rng, dims, rng.pick(model.states), 3);
        for (const Step& step : post_configs(model, c)) {
            CHECK(conforms(dims, step.target));
        }
    }
}

TEST_CASE("ideal_post shifts the limit point") {
    // weight-only shift: the limit point moves with the delta
    WVass shift;
    shift.dims = Dims{0, 2};
    shift.states = {"q"};
    shift.transitions = {Transition{"t", "q", "q", {}, {-3, 2}}};
    const auto image =
        ideal_post(shift, shift.transitions[0], ideal("q", {}, {wt(2), wt(3)}));
    REQUIRE(image.has_value());
    CHECK(*image == ideal("q", {}, {wt(-1), wt(5)}));

    // guarded counter with a weight in tow
    WVass guarded;
    guarded.dims = Dims{1, 1};
    guarded.states = {"q"};
    guarded.transitions = {Transition{"t", "q", "q", {-1}, {2}}};
    const auto guarded_image = ideal_post(
        guarded, guarded.transitions[0], ideal("q", {nat(2)}, {wt(0)}));
    REQUIRE(guarded_image.has_value());
    CHECK(*guarded_image == ideal("q", {nat(1)}, {wt(2)}));

    // no member of nat(0) can take a -1 step
    const auto blocked = ideal_post(
        guarded, guarded.transitions[0], ideal("q", {nat(0)}, {wt(0)}));
    CHECK(!blocked.has_value());

    // omega absorbs the shift
    WVass wide;
    wide.dims = Dims{1, 0};
    wide.states = {"q"};
    wide.transitions = {Transition{"t", "q", "q", {-5}, {}}};
    const auto wide_image = ideal_post(
        wide, wide.transitions[0], ideal("q", {CounterLimit::omega()}, {}));
    REQUIRE(wide_image.has_value());
    CHECK(*wide_image == ideal("q", {CounterLimit::omega()}, {}));
}

TEST_CASE("downset_post worked examples") {
    const WVass model = loop_model();
    CHECK(downset_post(model, DownSet{}) == DownSet{});

    const DownSet start = minimize(
        model.dims, std::vector<Ideal>{ideal("q", {}, {wt(0), wt(0)})});
    const DownSet expected = minimize(
        model.dims, std::vector<Ideal>{ideal("q", {}, {wt(0), wt(1)})});
    CHECK(downset_post(model, start) == expected);
}

TEST_CASE("downset_post agrees with the brute-force closure on boxes") {
    Rng rng(2002);
    int checked = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const Dims dims = testing::random_dims(rng);
        const WVass model = testing::random_model(rng, dims, 3, 4, 2);
        const DownSet set =
            testing::random_downset(rng, dims, model.states, 2);
        CHECK(testing::downset_post_agrees_with_oracle(model, set));
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("upward strong and strict monotonicity in all dimensions") {
    Rng rng(2003);
    for (int iter = 0; iter < 400; ++iter) {
        const Dims dims = testing::random_dims(rng);
        const WVass model = testing::random_model(rng, dims, 3, 4, 3);
        const StateId state = rng.pick(model.states);
        const Config low = testing::random_config(rng, dims, state, 3);
        Config high = low;
        if (rng.chance(0.5) && dims.counters > 0) {
            for (int i = 0; i < dims.counters; ++i) {
                high.counters[i] += rng.range(0, 2);
            }
        } else if (dims.weights > 0) {
            const int pos = static_cast<int>(rng.range(0, dims.weights - 1));
            high.weights[pos] += rng.range(0, 2);
            for (int i = pos + 1; i < dims.weights; ++i) {
                high.weights[i] = rng.range(-3, 3);
            }
        }
        if (!config_leq(dims, low, high)) continue;
        const bool strictly = !(low == high);

        const auto low_steps = post_configs(model, low);
        const auto high_steps = post_configs(model, high);
        for (const Step& step : low_steps) {
            const auto match = std::find_if(
                high_steps.begin(), high_steps.end(), [&](const Step& other) {
                    return other.transition == step.transition;
                });
            REQUIRE(match != high_steps.end());
            CHECK(config_leq(dims, step.target, match->target));
            if (strictly) {
                CHECK(!(step.target == match->target));
            }
        }
    }
}

TEST_CASE("downward strong and strict monotonicity when counter-free") {
    Rng rng(2004);
    for (int iter = 0; iter < 400; ++iter) {
        const Dims dims{0, static_cast<int>(rng.range(1, 3))};
        const WVass model = testing::random_model(rng, dims, 3, 4, 3);
        const StateId state = rng.pick(model.states);
        const Config high = testing::random_config(rng, dims, state, 3);
        Config low = high;
        const int pos = static_cast<int>(rng.range(0, dims.weights - 1));
        low.weights[pos] -= rng.range(0, 2);
        for (int i = pos + 1; i < dims.weights; ++i) {
            low.weights[i] = rng.range(-3, 3);
        }
        if (!config_leq(dims, low, high)) continue;
        const bool strictly = !(low == high);

        const auto high_steps = post_configs(model, high);
        const auto low_steps = post_configs(model, low);
        for (const Step& step : high_steps) {
            const auto match = std::find_if(
                low_steps.begin(), low_steps.end(), [&](const Step& other) {
                    return other.transition == step.transition;
                });
            REQUIRE(match != low_steps.end());
            CHECK(config_leq(dims, match->target, step.target));
            if (strictly) {
                CHECK(!(match->target == step.target));
            }
        }
    }
}

TEST_CASE("downward monotonicity fails under guards: recorded counterexample") {
    WVass model;
    model.dims = Dims{1, 0};
    model.states = {"q"};
    model.transitions = {Transition{"t", "q", "q", {-1}, {}}};

    const Config high = cfg("q", {1}, {});
    const Config low = cfg("q", {0}, {});
    REQUIRE(config_leq(model.dims, low, high));
    // the step is enabled above but nothing at all is enabled below
    CHECK(post_configs(model, high).size() == 1);
    CHECK(post_configs(model, low).empty());
}

TEST_CASE("backward_step reproduces the loop iteration minima") {
    const WVass model = loop_model();
    UpSet set = up_of_config(model, cfg("q", {}, {1, 1}));
    CHECK(set.lex_min.at("q") == std::vector<std::int64_t>{1, 1});
    set = backward_step(model, set);
    CHECK(set.lex_min.at("q") == std::vector<std::int64_t>{1, 0});
    set = backward_step(model, set);
    CHECK(set.lex_min.at("q") == std::vector<std::int64_t>{1, -1});
    set = backward_step(model, set);
    CHECK(set.lex_min.at("q") == std::vector<std::int64_t>{1, -2});
}

TEST_CASE("backward_step propagates minima across states") {
    WVass model;
    model.dims = Dims{0, 1};
    model.states = {"p", "q"};
    model.transitions = {Transition{"go", "p", "q", {}, {2}},
                         Transition{"self", "p", "p", {}, {1}}};
    UpSet set = up_of_config(model, cfg("q", {}, {5}));
    set = backward_step(model, set);
    // predecessors of q-minimum 5 through "go" appear at p as 5 - 2
    CHECK(set.lex_min.at("q") == std::vector<std::int64_t>{5});
    CHECK(set.lex_min.at("p") == std::vector<std::int64_t>{3});
    set = backward_step(model, set);
    // the self-loop at p keeps lowering the p-minimum
    CHECK(set.lex_min.at("p") == std::vector<std::int64_t>{2});
}

TEST_CASE("backward_step without transitions is a fixpoint") {
    WVass model;
    model.dims = Dims{0, 1};
    model.states = {"q"};
    const UpSet set = up_of_config(model, cfg("q", {}, {7}));
    CHECK(backward_step(model, set) == set);
}

TEST_CASE("backward_step refuses guarded counters") {
    WVass model;
    model.dims = Dims{1, 1};
    model.states = {"q"};
    CHECK_THROWS_AS(backward_step(model, UpSet{}), UnsupportedModelError);
}

TEST_CASE("backward_step minima never lexicographically increase") {
    Rng rng(2005);
    for (int iter = 0; iter < 150; ++iter) {
        const Dims dims{0, static_cast<int>(rng.range(1, 3))};
        const WVass model = testing::random_model(rng, dims, 3, 4, 2);
        UpSet set = up_of_config(
            model, testing::random_config(rng, dims, rng.pick(model.states), 3));
        for (int step = 0; step < 8; ++step) {
            const UpSet next = backward_step(model, set);
            for (const auto& [state, min] : set.lex_min) {
                REQUIRE(next.lex_min.contains(state));
                CHECK(lex_leq(next.lex_min.at(state), min));
            }
            set = next;
        }
    }
}

TEST_CASE("upset_contains matches the up-closure meaning") {
    const WVass model = loop_model();
    const UpSet set = up_of_config(model, cfg("q", {}, {1, 1}));
    CHECK(upset_contains(model, set, cfg("q", {}, {1, 1})));
    CHECK(upset_contains(model, set, cfg("q", {}, {1, 2})));
    CHECK(upset_contains(model, set, cfg("q", {}, {2, -100})));
    CHECK(!upset_contains(model, set, cfg("q", {}, {0, 100})));
}

TEST_CASE("replay_run validates names, sources and guards") {
    WVass model;
    model.dims = Dims{1, 1};
    model.states = {"a", "b"};
    model.transitions = {Transition{"go", "a", "b", {-1}, {5}},
                         Transition{"back", "b", "a", {0}, {0}}};
    const Config start = cfg("a", {1}, {0});
    CHECK(replay_run(model, Run{start, {"go", "back"}}) == cfg("a", {0}, {5}));
    CHECK(!replay_run(model, Run{start, {"back"}}).has_value());   // wrong source
    CHECK(!replay_run(model, Run{start, {"nosuch"}}).has_value()); // unknown
    CHECK(!replay_run(model, Run{start, {"go", "back", "go"}}).has_value());
}
