// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: parse a model and a query, run the requested
// decider, print a plain-text certificate.
//
// Exit codes: 0 decided, 2 parse or usage error, 3 unsupported
// model/operation pairing, 4 budget or cap exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wvass/antichain_tree.hpp"
#include "wvass/cover.hpp"
#include "wvass/errors.hpp"
#include "wvass/oracle.hpp"
#include "wvass/text.hpp"

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitExhausted = 4;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<wvass::WVass> load_model(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "cannot read model file '" << path << "'\n";
        return std::nullopt;
    }
    wvass::ModelParse parsed = wvass::parse_model(*text);
    if (!parsed.model) {
        std::cerr << wvass::format_errors(parsed.errors);
        return std::nullopt;
    }
    const auto violations = wvass::validate(*parsed.model);
    if (!violations.empty()) {
        for (const std::string& v : violations) std::cerr << v << "\n";
        return std::nullopt;
    }
    return parsed.model;
}

std::optional<wvass::Config> load_config(const wvass::WVass& model,
                                         const std::string& literal,
                                         const char* what) {
    std::string error;
    auto config = wvass::parse_config(model.dims, literal, error);
    if (!config) {
        std::cerr << what << ": " << error << "\n";
        return std::nullopt;
    }
    if (!model.has_state(config->state)) {
        std::cerr << what << ": unknown state '" << config->state << "'\n";
        return std::nullopt;
    }
    return config;
}

std::optional<wvass::Budget> parse_budget(const std::string& text) {
    if (text == "unlimited") return wvass::Budget::unlimited();
    try {
        std::size_t used = 0;
        const long long rounds = std::stoll(text, &used);
        if (used != text.size() || rounds < 0) return std::nullopt;
        return wvass::Budget::rounds(rounds);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<wvass::DownSet> load_hint(const wvass::WVass& model,
                                        const std::string& path, bool& failed) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "cannot read hint file '" << path << "'\n";
        failed = true;
        return std::nullopt;
    }
    std::vector<wvass::ParseError> errors;
    auto hint = wvass::parse_invariant_lines(model.dims, *text, errors);
    if (!hint) {
        std::cerr << wvass::format_errors(errors);
        failed = true;
        return std::nullopt;
    }
    for (const wvass::Ideal& ideal : hint->ideals()) {
        if (!model.has_state(ideal.state)) {
            std::cerr << "hint: unknown state '" << ideal.state << "'\n";
            failed = true;
            return std::nullopt;
        }
    }
    return hint;
}

struct CoverArgs {
    std::string model_path;
    std::string from;
    std::string to;
    std::string budget = "1000000";
    std::string hint_path;
};

int run_cover(const CoverArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto from = load_config(*model, args.from, "--from");
    auto to = load_config(*model, args.to, "--to");
    if (!from || !to) return kExitParse;
    auto budget = parse_budget(args.budget);
    if (!budget) {
        std::cerr << "--budget: expected a nonnegative round count or "
                     "'unlimited'\n";
        return kExitParse;
    }
    std::optional<wvass::DownSet> hint;
    if (!args.hint_path.empty()) {
        bool failed = false;
        hint = load_hint(*model, args.hint_path, failed);
        if (failed) return kExitParse;
    }
    const wvass::CoverDecision decision =
        wvass::decide_cover(*model, *from, *to, *budget, hint);
    if (decision.hint_rejected) {
        std::cerr << "hint rejected: not a separating inductive invariant\n";
    }
    std::cout << wvass::render_cover_report(decision.verdict);
    return decision.verdict.kind == wvass::CoverVerdict::Kind::Unknown
               ? kExitExhausted
               : kExitDecided;
}

struct TreeArgs {
    std::string model_path;
    std::string from;
    std::int64_t node_cap = 1000000;
    bool dump_tree = false;
};

int run_tree_decider(const TreeArgs& args, bool termination) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto from = load_config(*model, args.from, "--from");
    if (!from) return kExitParse;
    if (args.dump_tree) {
        std::cout << wvass::render_tree_dump(
            wvass::build_antichain_tree(*model, *from, args.node_cap));
    }
    if (termination) {
        std::cout << wvass::render_termination_report(
            wvass::decide_termination(*model, *from, args.node_cap));
    } else {
        std::cout << wvass::render_boundedness_report(
            wvass::decide_boundedness(*model, *from, args.node_cap));
    }
    return kExitDecided;
}

struct BackwardArgs {
    std::string model_path;
    std::string from;
    std::string to;
    std::int64_t steps = 10;
};

int run_backward(const BackwardArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto from = load_config(*model, args.from, "--from");
    auto to = load_config(*model, args.to, "--to");
    if (!from || !to) return kExitParse;
    const wvass::BackwardTrace trace =
        wvass::backward_capped(*model, *from, *to, args.steps);
    std::cout << wvass::render_backward_report(trace);
    return trace.outcome == wvass::BackwardTrace::Outcome::Diverged
               ? kExitExhausted
               : kExitDecided;
}

struct DebugPostArgs {
    std::string model_path;
    std::string at;
};

int run_debug_post(const DebugPostArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto at = load_config(*model, args.at, "--at");
    if (!at) return kExitParse;
    for (const wvass::Step& step : wvass::post_configs(*model, *at)) {
        std::cout << step.transition << " -> "
                  << wvass::render_config(step.target) << "\n";
    }
    return kExitDecided;
}

struct DebugBoxArgs {
    std::string model_path;
    std::string ideal;
    std::vector<std::int64_t> nat_hi;
    std::vector<std::int64_t> wt_lo;
    std::vector<std::int64_t> wt_hi;
};

int run_debug_box_members(const DebugBoxArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    std::string error;
    auto ideal = wvass::parse_ideal(model->dims, args.ideal, error);
    if (!ideal) {
        std::cerr << "--ideal: " << error << "\n";
        return kExitParse;
    }
    wvass::oracle::Box box{args.nat_hi, args.wt_lo, args.wt_hi};
    if (!wvass::oracle::box_conforms(model->dims, box)) {
        std::cerr << "box bounds do not conform to the model dimensions\n";
        return kExitParse;
    }
    const auto members = wvass::oracle::box_members(model->dims, *ideal, box);
    for (const wvass::Config& c : members) {
        std::cout << wvass::render_config(c) << "\n";
    }
    std::cout << "count: " << members.size() << "\n";
    return kExitDecided;
}

struct DebugCoverArgs {
    std::string model_path;
    std::string from;
    std::string to;
    std::int64_t step_cap = 10000;
    std::int64_t state_cap = 100000;
};

int run_debug_brute_cover(const DebugCoverArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto from = load_config(*model, args.from, "--from");
    auto to = load_config(*model, args.to, "--to");
    if (!from || !to) return kExitParse;
    const auto result = wvass::oracle::brute_cover(*model, *from, *to,
                                                   args.step_cap, args.state_cap);
    if (!result.found) {
        std::cout << "UNKNOWN\n";
        return kExitExhausted;
    }
    std::cout << "COVERABLE\nrun:";
    for (const std::string& name : result.run.transitions) {
        std::cout << " " << name;
    }
    std::cout << "\nend: " << wvass::render_config(result.endpoint) << "\n";
    return kExitDecided;
}

struct DebugExploreArgs {
    std::string model_path;
    std::string from;
    std::int64_t state_cap = 10000;
    std::int64_t depth_cap = 10000;
};

int run_debug_explore(const DebugExploreArgs& args) {
    auto model = load_model(args.model_path);
    if (!model) return kExitParse;
    auto from = load_config(*model, args.from, "--from");
    if (!from) return kExitParse;
    const auto result = wvass::oracle::explore(*model, *from, args.state_cap,
                                               args.depth_cap);
    std::cout << "visited: " << result.visited.size() << "\n"
              << "cap_hit: " << (result.cap_hit ? "yes" : "no") << "\n"
              << "cycle: " << (result.cycle_found ? "yes" : "no") << "\n"
              << "comparable_pair: "
              << (result.comparable_pair_found
                      ? "yes"
                      : (result.comparable_conclusive ? "no" : "unknown"))
              << "\n";
    return kExitDecided;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic coverability, termination and boundedness checker "
                 "for weighted VASS"};
    app.require_subcommand(1);

    CoverArgs cover_args;
    CLI::App* cover = app.add_subcommand(
        "cover", "decide whether the target is coverable from the source");
    cover->add_option("model", cover_args.model_path, "model file")->required();
    cover->add_option("--from", cover_args.from, "source config literal")
        ->required();
    cover->add_option("--to", cover_args.to, "target config literal")
        ->required();
    cover->add_option("--budget", cover_args.budget,
                      "dovetail round budget or 'unlimited'");
    cover->add_option("--hint", cover_args.hint_path,
                      "file with one candidate invariant ideal per line");

    TreeArgs term_args;
    CLI::App* term = app.add_subcommand(
        "terminates", "decide termination (models without counters only)");
    term->add_option("model", term_args.model_path, "model file")->required();
    term->add_option("--from", term_args.from, "start config literal")
        ->required();
    term->add_option("--node-cap", term_args.node_cap, "tree node cap");
    term->add_flag("--dump-tree", term_args.dump_tree, "print the tree");

    TreeArgs bound_args;
    CLI::App* bound = app.add_subcommand(
        "bounded", "decide boundedness (models without counters only)");
    bound->add_option("model", bound_args.model_path, "model file")->required();
    bound->add_option("--from", bound_args.from, "start config literal")
        ->required();
    bound->add_option("--node-cap", bound_args.node_cap, "tree node cap");
    bound->add_flag("--dump-tree", bound_args.dump_tree, "print the tree");

    BackwardArgs back_args;
    CLI::App* back = app.add_subcommand(
        "backward-demo",
        "iterate the backward algorithm a bounded number of steps");
    back->add_option("model", back_args.model_path, "model file")->required();
    back->add_option("--from", back_args.from, "source config literal")
        ->required();
    back->add_option("--to", back_args.to, "target config literal")->required();
    back->add_option("--steps", back_args.steps, "iteration allowance");

    CLI::App* debug = app.add_subcommand("debug", "brute-force cross-checks");
    debug->require_subcommand(1);

    DebugPostArgs post_args;
    CLI::App* dpost = debug->add_subcommand("post", "one-step successors");
    dpost->add_option("model", post_args.model_path, "model file")->required();
    dpost->add_option("--at", post_args.at, "config literal")->required();

    DebugBoxArgs box_args;
    CLI::App* dbox =
        debug->add_subcommand("box-members", "ideal members within a box");
    dbox->add_option("model", box_args.model_path, "model file")->required();
    dbox->add_option("--ideal", box_args.ideal, "ideal literal")->required();
    dbox->add_option("--nat-hi", box_args.nat_hi, "counter upper bounds")
        ->delimiter(',');
    dbox->add_option("--wt-lo", box_args.wt_lo, "weight lower bounds")
        ->delimiter(',');
    dbox->add_option("--wt-hi", box_args.wt_hi, "weight upper bounds")
        ->delimiter(',');

    DebugCoverArgs bcover_args;
    CLI::App* dbcover =
        debug->add_subcommand("brute-cover", "breadth-first cover search");
    dbcover->add_option("model", bcover_args.model_path, "model file")
        ->required();
    dbcover->add_option("--from", bcover_args.from, "source config literal")
        ->required();
    dbcover->add_option("--to", bcover_args.to, "target config literal")
        ->required();
    dbcover->add_option("--step-cap", bcover_args.step_cap, "BFS depth cap");
    dbcover->add_option("--state-cap", bcover_args.state_cap, "visited cap");

    DebugExploreArgs explore_args;
    CLI::App* dexplore =
        debug->add_subcommand("explore", "bounded reachability exploration");
    dexplore->add_option("model", explore_args.model_path, "model file")
        ->required();
    dexplore->add_option("--from", explore_args.from, "start config literal")
        ->required();
    dexplore->add_option("--state-cap", explore_args.state_cap, "visited cap");
    dexplore->add_option("--depth-cap", explore_args.depth_cap, "depth cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (cover->parsed()) return run_cover(cover_args);
        if (term->parsed()) return run_tree_decider(term_args, true);
        if (bound->parsed()) return run_tree_decider(bound_args, false);
        if (back->parsed()) return run_backward(back_args);
        if (debug->parsed()) {
            if (dpost->parsed()) return run_debug_post(post_args);
            if (dbox->parsed()) return run_debug_box_members(box_args);
            if (dbcover->parsed()) return run_debug_brute_cover(bcover_args);
            if (dexplore->parsed()) return run_debug_explore(explore_args);
        }
    } catch (const wvass::UnsupportedModelError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupported;
    } catch (const wvass::CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitExhausted;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
