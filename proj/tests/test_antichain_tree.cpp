// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wvass/antichain_tree.hpp"
#include "wvass/errors.hpp"

using namespace wvass;
using wvass::testing::Rng;

namespace {

Config cfg(StateId q, std::vector<std::int64_t> weights) {
    return Config{std::move(q), {}, std::move(weights)};
}

WVass weight_loop(std::vector<std::int64_t> delta) {
    WVass model;
    model.dims = Dims{0, static_cast<int>(delta.size())};
    model.states = {"q"};
    model.transitions = {Transition{"t", "q", "q", {}, std::move(delta)}};
    return model;
}

} // namespace

TEST_CASE("an increasing loop truncates right under the root") {
    const WVass model = weight_loop({1});
    const AntichainTree tree = build_antichain_tree(model, cfg("q", {0}), 100);
    REQUIRE(tree.nodes.size() == 2);
    CHECK(tree.nodes[0].mark == TreeNode::Mark::Expanded);
    CHECK(tree.nodes[1].mark == TreeNode::Mark::Truncated);
    CHECK(tree.nodes[1].label == cfg("q", {1}));
    CHECK(*tree.nodes[1].comparable_ancestor == 0);
    CHECK(*tree.nodes[1].relation == AncestorRelation::Below);
    CHECK(tree.path_to(1) == std::vector<std::string>{"t"});
}

TEST_CASE("a model without transitions gives a single leaf") {
    WVass model;
    model.dims = Dims{0, 1};
    model.states = {"q"};
    const AntichainTree tree = build_antichain_tree(model, cfg("q", {0}), 100);
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].mark == TreeNode::Mark::Leaf);
}

TEST_CASE("an equal label counts as comparable") {
    const WVass model = weight_loop({0});
    const AntichainTree tree = build_antichain_tree(model, cfg("q", {0}), 100);
    REQUIRE(tree.nodes.size() == 2);
    CHECK(tree.nodes[1].mark == TreeNode::Mark::Truncated);
    CHECK(*tree.nodes[1].relation == AncestorRelation::Equal);
}

TEST_CASE("tree construction refuses guarded counters and tiny caps") {
    WVass guarded;
    guarded.dims = Dims{1, 0};
    guarded.states = {"q"};
    CHECK_THROWS_AS(build_antichain_tree(guarded, Config{"q", {0}, {}}, 100),
                    UnsupportedModelError);
    CHECK_THROWS_AS(
        build_antichain_tree(weight_loop({1}), cfg("q", {0}), 1),
        CapExceededError);
}

TEST_CASE("decide_termination hand examples") {
    const auto growing = decide_termination(weight_loop({1}), cfg("q", {0}), 1000);
    CHECK(!growing.terminates);
    REQUIRE(growing.witness.has_value());
    CHECK(growing.witness->ancestor_label == cfg("q", {0}));
    CHECK(growing.witness->node_label == cfg("q", {1}));
    CHECK(growing.witness->relation == AncestorRelation::Below);
    CHECK(growing.witness->path == std::vector<std::string>{"t"});

    const auto spinning = decide_termination(weight_loop({0}), cfg("q", {0}), 1000);
    CHECK(!spinning.terminates);
    REQUIRE(spinning.witness.has_value());
    CHECK(spinning.witness->relation == AncestorRelation::Equal);

    WVass inert;
    inert.dims = Dims{0, 1};
    inert.states = {"q"};
    CHECK(decide_termination(inert, cfg("q", {0}), 1000).terminates);
}

TEST_CASE("decide_boundedness hand examples") {
    const auto spinning = decide_boundedness(weight_loop({0}), cfg("q", {0}), 1000);
    CHECK(spinning.bounded);

    const auto draining = decide_boundedness(weight_loop({-1}), cfg("q", {0}), 1000);
    CHECK(!draining.bounded);
    REQUIRE(draining.witness.has_value());
    CHECK(draining.witness->node_label == cfg("q", {-1}));
    CHECK(draining.witness->relation == AncestorRelation::Above);

    const auto tail = decide_boundedness(weight_loop({0, -1}), cfg("q", {0, 0}),
                                         1000);
    CHECK(!tail.bounded);
    REQUIRE(tail.witness.has_value());
    CHECK(tail.witness->node_label == cfg("q", {0, -1}));
    CHECK(tail.witness->ancestor_label == cfg("q", {0, 0}));
}

TEST_CASE("deciders refuse guarded counters") {
    WVass guarded;
    guarded.dims = Dims{2, 0};
    guarded.states = {"q"};
    const Config start{"q", {0, 0}, {}};
    CHECK_THROWS_AS(decide_termination(guarded, start, 100),
                    UnsupportedModelError);
    CHECK_THROWS_AS(decide_boundedness(guarded, start, 100),
                    UnsupportedModelError);
}

TEST_CASE("trees are finite, replayable and truncation-sound") {
    Rng rng(5001);
    for (int iter = 0; iter < 200; ++iter) {
        const Dims dims{0, static_cast<int>(rng.range(1, 2))};
        const WVass model = testing::random_model(rng, dims, 3, 4, 1);
        const Config start =
            testing::random_config(rng, dims, rng.pick(model.states), 1);
        const AntichainTree tree =
            build_antichain_tree(model, start, 1000000);
        for (const TreeNode& node : tree.nodes) {
            // every path is a valid run prefix labeling its node
            const auto replayed =
                replay_run(model, Run{start, tree.path_to(node.id)});
            REQUIRE(replayed.has_value());
            CHECK(*replayed == node.label);
            // recorded truncations are genuinely comparable as recorded
            if (node.mark == TreeNode::Mark::Truncated) {
                const Config& ancestor =
                    tree.nodes[*node.comparable_ancestor].label;
                switch (*node.relation) {
                case AncestorRelation::Below:
                    CHECK(config_leq(dims, ancestor, node.label));
                    CHECK(!(ancestor == node.label));
                    break;
                case AncestorRelation::Above:
                    CHECK(config_leq(dims, node.label, ancestor));
                    CHECK(!(ancestor == node.label));
                    break;
                case AncestorRelation::Equal:
                    CHECK(ancestor == node.label);
                    break;
                }
            }
            // expanded nodes carry every successor as a child
            if (node.mark == TreeNode::Mark::Expanded) {
                std::size_t children = 0;
                for (const TreeNode& other : tree.nodes) {
                    children += other.parent == node.id ? 1 : 0;
                }
                CHECK(children == post_configs(model, node.label).size());
            }
        }
    }
}

TEST_CASE("deciders agree with the exploration oracle when it is conclusive") {
    Rng rng(5002);
    int conclusive = 0;
    int attempts = 0;
    while (conclusive < 100 && attempts < 20000) {
        ++attempts;
        const Dims dims{0, static_cast<int>(rng.range(1, 2))};
        const WVass model = testing::random_model(rng, dims, 3, 4, 1);
        const Config start =
            testing::random_config(rng, dims, rng.pick(model.states), 1);
        const auto explored = oracle::explore(model, start, 2000, 200);
        if (explored.cap_hit) continue;
        ++conclusive;
        // a fully explored finite graph: nontermination is exactly a cycle,
        // and the reachable set is finite, so the model is bounded
        CHECK(decide_termination(model, start, 1000000).terminates ==
              !explored.cycle_found);
        CHECK(decide_boundedness(model, start, 1000000).bounded);
    }
    CHECK(conclusive == 100);
}

TEST_CASE("unbounded verdicts come with cap-hitting explorations") {
    Rng rng(5003);
    int unbounded_seen = 0;
    for (int iter = 0; iter < 300 && unbounded_seen < 40; ++iter) {
        const Dims dims{0, static_cast<int>(rng.range(1, 2))};
        const WVass model = testing::random_model(rng, dims, 3, 4, 1);
        const Config start =
            testing::random_config(rng, dims, rng.pick(model.states), 1);
        const auto verdict = decide_boundedness(model, start, 1000000);
        if (verdict.bounded) continue;
        ++unbounded_seen;
        const auto explored = oracle::explore(model, start, 500, 500);
        CHECK(explored.cap_hit);
    }
    CHECK(unbounded_seen == 40);
}
