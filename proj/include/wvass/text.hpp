// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvass/antichain_tree.hpp"
#include "wvass/cover.hpp"
#include "wvass/downset.hpp"
#include "wvass/model.hpp"
#include "wvass/symbolic.hpp"

namespace wvass {

// Renderings are bit-exact and parse back to the same value.

std::string render_config(const Config& c);   // q nat(1,0) wt(-3)
std::string render_ideal(const Ideal& i);     // q : nat(2,omega) wt(+inf,+inf)
std::string render_model(const WVass& model); // the model file format
std::string render_upset(const UpSet& set);   // per-state minima, "; "-joined

struct ParseError {
    int line = 0; // 0 when the input is a single literal
    std::string message;
};

std::string format_errors(const std::vector<ParseError>& errors);

struct ModelParse {
    std::optional<WVass> model; // present iff errors is empty
    std::vector<ParseError> errors;
};

/// Parses the line-oriented model format:
///   model weighted d=<int> w=<int>
///   states q0 q1 ...
///   trans <name>: <src> -> <dst> nat(<z>,...) wt(<z>,...)
/// `#` starts a comment; whitespace is free-form. All violations are
/// reported with their line numbers.
ModelParse parse_model(const std::string& text);

std::optional<Config> parse_config(const Dims& dims, const std::string& text,
                                   std::string& error);

std::optional<Ideal> parse_ideal(const Dims& dims, const std::string& text,
                                 std::string& error);

/// Parses an invariant file: one ideal rendering per line, an optional
/// leading `inv:` allowed so certificate lines can be pasted back verbatim.
/// The result is the canonical union of the listed ideals.
std::optional<DownSet> parse_invariant_lines(const Dims& dims,
                                             const std::string& text,
                                             std::vector<ParseError>& errors);

// Report formats emitted by the command-line front end. All deterministic
// plain text, one fact per line.

std::string render_cover_report(const CoverVerdict& verdict);
std::string render_termination_report(const TerminationVerdict& verdict);
std::string render_boundedness_report(const BoundednessVerdict& verdict);
std::string render_backward_report(const BackwardTrace& trace);
std::string render_tree_dump(const AntichainTree& tree);

/// `witness: <smaller> <= <larger> via path <t...>`; `<` when rendered for a
/// strict (boundedness) witness. Equal labels print ancestor first.
std::string render_witness_line(const ComparabilityWitness& witness,
                                bool strict);

} // namespace wvass
