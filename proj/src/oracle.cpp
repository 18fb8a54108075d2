// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "wvass/errors.hpp"

namespace wvass::oracle {

namespace {
constexpr std::int64_t kBoxSizeCap = 10'000'000;
} // namespace

bool box_conforms(const Dims& dims, const Box& box) {
    return static_cast<int>(box.counter_hi.size()) == dims.counters &&
           static_cast<int>(box.weight_lo.size()) == dims.weights &&
           static_cast<int>(box.weight_hi.size()) == dims.weights;
}

std::int64_t box_size(const Dims& dims, const Box& box) {
    if (!box_conforms(dims, box)) {
        throw std::invalid_argument("box does not conform to dimensions");
    }
    std::int64_t size = 1;
    auto grow = [&size](std::int64_t range) {
        if (range <= 0) { // an empty range empties the whole box
            size = 0;
            return;
        }
        if (size > kBoxSizeCap / range) {
            throw CapExceededError("box size exceeds cap");
        }
        size *= range;
    };
    for (std::int64_t hi : box.counter_hi) grow(hi + 1);
    for (int i = 0; i < dims.weights; ++i) {
        grow(box.weight_hi[i] - box.weight_lo[i] + 1);
    }
    return size;
}

std::vector<Config> box_configs(const Dims& dims, const Box& box,
                                const StateId& state) {
    const std::int64_t size = box_size(dims, box);
    if (size == 0) return {};
    std::vector<Config> out;
    out.reserve(static_cast<std::size_t>(size));
    Config current;
    current.state = state;
    current.counters.assign(dims.counters, 0);
    current.weights = box.weight_lo;
    while (true) {
        out.push_back(current);
        int pos = dims.weights - 1;
        while (pos >= 0 && current.weights[pos] == box.weight_hi[pos]) {
            current.weights[pos] = box.weight_lo[pos];
            --pos;
        }
        if (pos >= 0) {
            ++current.weights[pos];
            continue;
        }
        pos = dims.counters - 1;
        while (pos >= 0 && current.counters[pos] == box.counter_hi[pos]) {
            current.counters[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++current.counters[pos];
    }
    return out;
}

bool member_by_definition(const Dims& dims, const Ideal& ideal,
                          const Config& c) {
    require_conforms(dims, ideal, "member_by_definition");
    require_conforms(dims, c, "member_by_definition");
    if (c.state != ideal.state) return false;

    // Counter part against the limit point: componentwise with omega above
    // every natural; remember whether the comparison is an equality.
    bool leq = true;
    bool eq = true;
    for (int i = 0; i < dims.counters; ++i) {
        const CounterLimit u = ideal.counter_limit[i];
        if (u.is_omega()) {
            eq = false; // a finite value never equals omega
        } else if (c.counters[i] < u.value()) {
            eq = false;
        } else if (c.counters[i] > u.value()) {
            leq = false;
        }
    }
    if (!leq) return false;
    if (!eq) return true; // strictly below: weights are not consulted

    // Equal counter parts: weights decide, lexicographically with +inf above
    // every integer.
    for (int i = 0; i < dims.weights; ++i) {
        const WeightLimit m = ideal.weight_limit[i];
        if (m.is_inf()) return true; // first difference, and +inf wins
        if (c.weights[i] != m.value()) return c.weights[i] < m.value();
    }
    return true; // equal to the limit point
}

std::vector<Config> box_members(const Dims& dims, const Ideal& ideal,
                                const Box& box) {
    std::vector<Config> out;
    for (const Config& c : box_configs(dims, box, ideal.state)) {
        if (member_by_definition(dims, ideal, c)) out.push_back(c);
    }
    return out;
}

std::vector<Config> brute_post_box(const WVass& model,
                                   std::span<const Config> sources,
                                   const Box& box) {
    std::vector<Config> successors;
    for (const Config& c : sources) {
        for (const Step& step : post_configs(model, c)) {
            successors.push_back(step.target);
        }
    }
    std::set<StateId> successor_states;
    for (const Config& s : successors) successor_states.insert(s.state);

    std::vector<Config> closure;
    for (const StateId& state : successor_states) {
        for (const Config& candidate : box_configs(model.dims, box, state)) {
            const bool below = std::any_of(
                successors.begin(), successors.end(), [&](const Config& s) {
                    return config_leq(model.dims, candidate, s);
                });
            if (below) closure.push_back(candidate);
        }
    }
    std::sort(closure.begin(), closure.end(), config_rep_less);
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    return closure;
}

namespace {

using ConfigSet = std::map<Config, std::size_t, decltype(&config_rep_less)>;

// Any cycle within the visited portion of the reachability graph.
bool has_cycle(const std::vector<Config>& nodes,
               const std::vector<std::vector<std::size_t>>& edges) {
    enum class Color { White, Grey, Black };
    std::vector<Color> color(nodes.size(), Color::White);
    for (std::size_t root = 0; root < nodes.size(); ++root) {
        if (color[root] != Color::White) continue;
        // Iterative DFS; a grey-to-grey edge closes a cycle.
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = Color::Grey;
        while (!stack.empty()) {
            auto& [node, next_edge] = stack.back();
            if (next_edge < edges[node].size()) {
                const std::size_t target = edges[node][next_edge++];
                if (color[target] == Color::Grey) return true;
                if (color[target] == Color::White) {
                    color[target] = Color::Grey;
                    stack.emplace_back(target, 0);
                }
            } else {
                color[node] = Color::Black;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

ExploreResult explore(const WVass& model, const Config& start,
                      std::int64_t state_cap, std::int64_t depth_cap) {
    if (state_cap < 1 || depth_cap < 1) {
        throw std::invalid_argument("explore: caps must be >= 1");
    }
    ExploreResult result;
    ConfigSet index(&config_rep_less);
    std::vector<Config> nodes;
    std::vector<std::int64_t> depth;
    std::deque<std::size_t> queue;

    index.emplace(start, 0);
    nodes.push_back(start);
    depth.push_back(0);
    queue.push_back(0);

    std::vector<std::vector<std::size_t>> edges(1);
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const auto steps = post_configs(model, nodes[id]);
        if (depth[id] == depth_cap) {
            if (!steps.empty()) result.cap_hit = true;
            continue;
        }
        for (const Step& step : steps) {
            auto it = index.find(step.target);
            if (it != index.end()) {
                edges[id].push_back(it->second);
                continue;
            }
            if (static_cast<std::int64_t>(nodes.size()) >= state_cap) {
                result.cap_hit = true;
                continue;
            }
            const std::size_t fresh = nodes.size();
            index.emplace(step.target, fresh);
            nodes.push_back(step.target);
            depth.push_back(depth[id] + 1);
            edges.emplace_back();
            edges[id].push_back(fresh);
            queue.push_back(fresh);
        }
    }
    result.cycle_found = has_cycle(nodes, edges);
    result.visited = nodes;

    // Separate bounded walk over run prefixes, looking for two comparable
    // configs on one path.
    std::int64_t budget = state_cap;
    bool truncated = false;
    std::vector<Config> path;
    std::function<bool(const Config&, std::int64_t)> walk =
        [&](const Config& c, std::int64_t d) {
            for (const Config& ancestor : path) {
                if (config_leq(model.dims, ancestor, c) ||
                    config_leq(model.dims, c, ancestor)) {
                    return true;
                }
            }
            if (d == depth_cap) {
                if (!post_configs(model, c).empty()) truncated = true;
                return false;
            }
            path.push_back(c);
            for (const Step& step : post_configs(model, c)) {
                if (--budget < 0) {
                    truncated = true;
                    break;
                }
                if (walk(step.target, d + 1)) {
                    path.pop_back();
                    return true;
                }
            }
            path.pop_back();
            return false;
        };
    result.comparable_pair_found = walk(start, 0);
    result.comparable_conclusive = result.comparable_pair_found || !truncated;
    return result;
}

BruteCoverResult brute_cover(const WVass& model, const Config& start,
                             const Config& target, std::int64_t step_cap,
                             std::int64_t state_cap) {
    if (step_cap < 1 || state_cap < 1) {
        throw std::invalid_argument("brute_cover: caps must be >= 1");
    }
    require_conforms(model.dims, start, "brute_cover");
    require_conforms(model.dims, target, "brute_cover");

    struct NodeInfo {
        std::size_t parent;
        std::string via;
        std::int64_t depth;
    };
    ConfigSet index(&config_rep_less);
    std::vector<Config> nodes;
    std::vector<NodeInfo> info;
    std::deque<std::size_t> queue;

    auto make_result = [&](std::size_t id) {
        BruteCoverResult result;
        result.found = true;
        result.endpoint = nodes[id];
        std::vector<std::string> names;
        for (std::size_t at = id; info[at].depth > 0; at = info[at].parent) {
            names.push_back(info[at].via);
        }
        std::reverse(names.begin(), names.end());
        result.run = Run{start, std::move(names)};
        return result;
    };

    index.emplace(start, 0);
    nodes.push_back(start);
    info.push_back(NodeInfo{0, "", 0});
    if (config_leq(model.dims, target, start)) return make_result(0);
    queue.push_back(0);

    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        if (info[id].depth == step_cap) continue;
        for (const Step& step : post_configs(model, nodes[id])) {
            if (index.contains(step.target)) continue;
            if (static_cast<std::int64_t>(nodes.size()) >= state_cap) continue;
            const std::size_t fresh = nodes.size();
            index.emplace(step.target, fresh);
            nodes.push_back(step.target);
            info.push_back(NodeInfo{id, step.transition, info[id].depth + 1});
            if (config_leq(model.dims, target, step.target)) {
                return make_result(fresh);
            }
            queue.push_back(fresh);
        }
    }
    return BruteCoverResult{};
}

} // namespace wvass::oracle
