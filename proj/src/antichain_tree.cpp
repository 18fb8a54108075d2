// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/antichain_tree.hpp"

#include <algorithm>
#include <deque>

#include "wvass/errors.hpp"

namespace wvass {

std::vector<std::string> AntichainTree::path_to(std::size_t id) const {
    std::vector<std::string> path;
    for (std::size_t at = id; nodes[at].parent.has_value();
         at = *nodes[at].parent) {
        path.push_back(nodes[at].via_transition);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

void require_counter_free(const WVass& model, const char* what) {
    if (model.dims.counters != 0) {
        throw UnsupportedModelError(
            std::string(what) +
            ": only supported for models without guarded counters (d = 0)");
    }
}

std::optional<AncestorRelation> compare_labels(const Dims& dims,
                                               const Config& ancestor,
                                               const Config& node) {
    const bool anc_leq = config_leq(dims, ancestor, node);
    const bool node_leq = config_leq(dims, node, ancestor);
    if (anc_leq && node_leq) return AncestorRelation::Equal;
    if (anc_leq) return AncestorRelation::Below;
    if (node_leq) return AncestorRelation::Above;
    return std::nullopt;
}

} // namespace

AntichainTree build_antichain_tree(const WVass& model, const Config& start,
                                   std::int64_t node_cap) {
    require_counter_free(model, "build_antichain_tree");
    require_conforms(model.dims, start, "build_antichain_tree");
    if (node_cap < 1) {
        throw std::invalid_argument("build_antichain_tree: node cap must be >= 1");
    }

    AntichainTree tree;
    tree.nodes.push_back(TreeNode{0, start, std::nullopt, "",
                                  TreeNode::Mark::Leaf, std::nullopt,
                                  std::nullopt});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();

        // First comparable ancestor in root-to-node order, if any.
        std::vector<std::size_t> ancestors;
        for (std::size_t at = id; tree.nodes[at].parent.has_value();
             at = *tree.nodes[at].parent) {
            ancestors.push_back(*tree.nodes[at].parent);
        }
        std::reverse(ancestors.begin(), ancestors.end());
        bool truncated = false;
        for (std::size_t ancestor : ancestors) {
            if (auto relation = compare_labels(model.dims,
                                               tree.nodes[ancestor].label,
                                               tree.nodes[id].label)) {
                tree.nodes[id].mark = TreeNode::Mark::Truncated;
                tree.nodes[id].comparable_ancestor = ancestor;
                tree.nodes[id].relation = relation;
                truncated = true;
                break;
            }
        }
        if (truncated) continue;

        const auto steps = post_configs(model, tree.nodes[id].label);
        tree.nodes[id].mark =
            steps.empty() ? TreeNode::Mark::Leaf : TreeNode::Mark::Expanded;
        for (const Step& step : steps) {
            if (static_cast<std::int64_t>(tree.nodes.size()) >= node_cap) {
                throw CapExceededError("build_antichain_tree: node cap exceeded");
            }
            const std::size_t child = tree.nodes.size();
            tree.nodes.push_back(TreeNode{child, step.target, id,
                                          step.transition, TreeNode::Mark::Leaf,
                                          std::nullopt, std::nullopt});
            queue.push_back(child);
        }
    }
    return tree;
}

namespace {

ComparabilityWitness witness_for(const AntichainTree& tree, std::size_t id) {
    const TreeNode& node = tree.nodes[id];
    return ComparabilityWitness{tree.nodes[*node.comparable_ancestor].label,
                                node.label, *node.relation, tree.path_to(id)};
}

} // namespace

TerminationVerdict decide_termination(const WVass& model, const Config& start,
                                      std::int64_t node_cap) {
    const AntichainTree tree = build_antichain_tree(model, start, node_cap);
    for (const TreeNode& node : tree.nodes) {
        if (node.mark == TreeNode::Mark::Truncated) {
            return TerminationVerdict{false, witness_for(tree, node.id)};
        }
    }
    return TerminationVerdict{true, std::nullopt};
}

BoundednessVerdict decide_boundedness(const WVass& model, const Config& start,
                                      std::int64_t node_cap) {
    const AntichainTree tree = build_antichain_tree(model, start, node_cap);
    for (const TreeNode& node : tree.nodes) {
        if (node.mark == TreeNode::Mark::Truncated &&
            *node.relation != AncestorRelation::Equal) {
            return BoundednessVerdict{false, witness_for(tree, node.id)};
        }
    }
    return BoundednessVerdict{true, std::nullopt};
}

} // namespace wvass
