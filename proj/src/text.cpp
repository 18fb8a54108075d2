// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wvass/text.hpp"

#include <cctype>
#include <sstream>

namespace wvass {

namespace {

constexpr std::int64_t kMaxMagnitude = 1'000'000'000;

void append_int_list(std::string& out, const std::vector<std::int64_t>& xs) {
    out += '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ')';
}

} // namespace

std::string render_config(const Config& c) {
    std::string out = c.state + " nat";
    append_int_list(out, c.counters);
    out += " wt";
    append_int_list(out, c.weights);
    return out;
}

std::string render_ideal(const Ideal& ideal) {
    std::string out = ideal.state + " : nat(";
    for (std::size_t i = 0; i < ideal.counter_limit.size(); ++i) {
        if (i > 0) out += ',';
        const CounterLimit u = ideal.counter_limit[i];
        out += u.is_omega() ? "omega" : std::to_string(u.value());
    }
    out += ") wt(";
    for (std::size_t i = 0; i < ideal.weight_limit.size(); ++i) {
        if (i > 0) out += ',';
        const WeightLimit m = ideal.weight_limit[i];
        out += m.is_inf() ? "+inf" : std::to_string(m.value());
    }
    out += ')';
    return out;
}

std::string render_model(const WVass& model) {
    std::string out = "model weighted d=" + std::to_string(model.dims.counters) +
                      " w=" + std::to_string(model.dims.weights) + "\n";
    out += "states";
    for (const StateId& s : model.states) out += " " + s;
    out += '\n';
    for (const Transition& t : model.transitions) {
        out += "trans " + t.name + ": " + t.src + " -> " + t.dst + " nat";
        append_int_list(out, t.counter_delta);
        out += " wt";
        append_int_list(out, t.weight_delta);
        out += '\n';
    }
    return out;
}

std::string render_upset(const UpSet& set) {
    std::string out;
    for (const auto& [state, min] : set.lex_min) {
        if (!out.empty()) out += "; ";
        out += state + " nat() wt";
        append_int_list(out, min);
    }
    if (out.empty()) out = "(empty)";
    return out;
}

// ---------------------------------------------------------------------------
// Lexing

namespace {

struct Token {
    enum class Kind {
        Ident,
        Int,
        PlusInf,
        LParen,
        RParen,
        Comma,
        Colon,
        Arrow,
        Equals,
        End,
        Bad,
    };
    Kind kind = Kind::End;
    std::string text;
    std::int64_t value = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view line) : line_(line) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < line_.size() &&
               std::isspace(static_cast<unsigned char>(line_[pos_]))) {
            ++pos_;
        }
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            current_ = Token{Token::Kind::End, "", 0};
            return;
        }
        const char c = line_[pos_];
        if (c == '(') { current_ = one(Token::Kind::LParen); return; }
        if (c == ')') { current_ = one(Token::Kind::RParen); return; }
        if (c == ',') { current_ = one(Token::Kind::Comma); return; }
        if (c == ':') { current_ = one(Token::Kind::Colon); return; }
        if (c == '=') { current_ = one(Token::Kind::Equals); return; }
        if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
            pos_ += 2;
            current_ = Token{Token::Kind::Arrow, "->", 0};
            return;
        }
        if (c == '+' && line_.compare(pos_, 4, "+inf") == 0) {
            pos_ += 4;
            current_ = Token{Token::Kind::PlusInf, "+inf", 0};
            return;
        }
        if (c == '-' || c == '+' ||
            std::isdigit(static_cast<unsigned char>(c))) {
            lex_int();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                    line_[pos_] == '_')) {
                ++pos_;
            }
            current_ = Token{Token::Kind::Ident,
                             std::string(line_.substr(start, pos_ - start)), 0};
            return;
        }
        current_ = Token{Token::Kind::Bad, std::string(1, c), 0};
        ++pos_;
    }

    Token one(Token::Kind kind) {
        Token t{kind, std::string(1, line_[pos_]), 0};
        ++pos_;
        return t;
    }

    void lex_int() {
        const std::size_t start = pos_;
        bool negative = false;
        if (line_[pos_] == '-' || line_[pos_] == '+') {
            negative = line_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= line_.size() ||
            !std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            current_ = Token{Token::Kind::Bad,
                             std::string(line_.substr(start, pos_ - start)), 0};
            return;
        }
        std::int64_t value = 0;
        bool overflow = false;
        while (pos_ < line_.size() &&
               std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            value = value * 10 + (line_[pos_] - '0');
            if (value > kMaxMagnitude) overflow = true;
            ++pos_;
        }
        if (overflow) {
            current_ = Token{Token::Kind::Bad,
                             std::string(line_.substr(start, pos_ - start)), 0};
            return;
        }
        current_ = Token{Token::Kind::Int,
                         std::string(line_.substr(start, pos_ - start)),
                         negative ? -value : value};
    }

    std::string_view line_;
    std::size_t pos_ = 0;
    Token current_;
};

// Per-element parser callback; returns an error message or empty.
template <typename Elem, typename ParseElem>
std::optional<std::vector<Elem>> parse_paren_list(Lexer& lex, ParseElem parse,
                                                  std::string& error) {
    if (lex.peek().kind != Token::Kind::LParen) {
        error = "expected '('";
        return std::nullopt;
    }
    lex.take();
    std::vector<Elem> out;
    if (lex.peek().kind == Token::Kind::RParen) {
        lex.take();
        return out;
    }
    while (true) {
        auto elem = parse(lex, error);
        if (!elem) return std::nullopt;
        out.push_back(std::move(*elem));
        if (lex.peek().kind == Token::Kind::Comma) {
            lex.take();
            continue;
        }
        if (lex.peek().kind == Token::Kind::RParen) {
            lex.take();
            return out;
        }
        error = "expected ',' or ')'";
        return std::nullopt;
    }
}

std::optional<std::int64_t> parse_int_elem(Lexer& lex, std::string& error) {
    if (lex.peek().kind != Token::Kind::Int) {
        error = "expected an integer, got '" + lex.peek().text + "'";
        return std::nullopt;
    }
    return lex.take().value;
}

std::optional<std::string> expect_ident(Lexer& lex, std::string& error) {
    if (lex.peek().kind != Token::Kind::Ident) {
        error = "expected a name, got '" + lex.peek().text + "'";
        return std::nullopt;
    }
    return lex.take().text;
}

bool expect_kind(Lexer& lex, Token::Kind kind, const char* what,
                 std::string& error) {
    if (lex.peek().kind != kind) {
        error = std::string("expected ") + what + ", got '" + lex.peek().text +
                "'";
        return false;
    }
    lex.take();
    return true;
}

bool expect_keyword(Lexer& lex, const char* word, std::string& error) {
    if (lex.peek().kind != Token::Kind::Ident || lex.peek().text != word) {
        error = std::string("expected '") + word + "', got '" +
                lex.peek().text + "'";
        return false;
    }
    lex.take();
    return true;
}

bool expect_end(Lexer& lex, std::string& error) {
    if (lex.peek().kind != Token::Kind::End) {
        error = "unexpected trailing input '" + lex.peek().text + "'";
        return false;
    }
    return true;
}

std::optional<std::vector<std::int64_t>> parse_vector(Lexer& lex,
                                                      const char* keyword,
                                                      int expected_len,
                                                      std::string& error) {
    if (!expect_keyword(lex, keyword, error)) return std::nullopt;
    auto list = parse_paren_list<std::int64_t>(lex, parse_int_elem, error);
    if (!list) return std::nullopt;
    if (static_cast<int>(list->size()) != expected_len) {
        error = std::string(keyword) + "(...) has " +
                std::to_string(list->size()) + " entries, expected " +
                std::to_string(expected_len);
        return std::nullopt;
    }
    return list;
}

} // namespace

// ---------------------------------------------------------------------------
// Model parsing

std::string format_errors(const std::vector<ParseError>& errors) {
    std::string out;
    for (const ParseError& e : errors) {
        if (e.line > 0) out += "line " + std::to_string(e.line) + ": ";
        out += e.message + "\n";
    }
    return out;
}

ModelParse parse_model(const std::string& text) {
    ModelParse result;
    WVass model;
    bool saw_header = false;
    bool saw_states = false;

    auto fail = [&result](int line, std::string message) {
        result.errors.push_back(ParseError{line, std::move(message)});
    };

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        Lexer lex(line);
        if (lex.peek().kind == Token::Kind::End) continue;
        std::string error;
        auto keyword = expect_ident(lex, error);
        if (!keyword) {
            fail(line_no, error);
            continue;
        }
        if (*keyword == "model") {
            if (saw_header) {
                fail(line_no, "duplicate model header");
                continue;
            }
            saw_header = true;
            std::int64_t d = -1;
            std::int64_t w = -1;
            const bool ok = expect_keyword(lex, "weighted", error) &&
                            expect_keyword(lex, "d", error) &&
                            expect_kind(lex, Token::Kind::Equals, "'='", error) &&
                            [&] {
                                auto v = parse_int_elem(lex, error);
                                if (v) d = *v;
                                return v.has_value();
                            }() &&
                            expect_keyword(lex, "w", error) &&
                            expect_kind(lex, Token::Kind::Equals, "'='", error) &&
                            [&] {
                                auto v = parse_int_elem(lex, error);
                                if (v) w = *v;
                                return v.has_value();
                            }() &&
                            expect_end(lex, error);
            if (!ok) {
                fail(line_no, error);
                continue;
            }
            if (d < 0 || w < 0 || d + w < 1) {
                fail(line_no, "dimensions must satisfy d >= 0, w >= 0, d + w >= 1");
                continue;
            }
            model.dims = Dims{static_cast<int>(d), static_cast<int>(w)};
        } else if (*keyword == "states") {
            if (!saw_header) {
                fail(line_no, "'states' before the model header");
                continue;
            }
            saw_states = true;
            while (lex.peek().kind == Token::Kind::Ident) {
                const std::string name = lex.take().text;
                if (model.has_state(name)) {
                    fail(line_no, "state '" + name + "' declared twice");
                } else {
                    model.states.push_back(name);
                }
            }
            if (!expect_end(lex, error)) fail(line_no, error);
        } else if (*keyword == "trans") {
            if (!saw_header) {
                fail(line_no, "'trans' before the model header");
                continue;
            }
            if (!saw_states) {
                fail(line_no, "'trans' before any 'states' line");
                continue;
            }
            Transition t;
            auto name = expect_ident(lex, error);
            if (!name) {
                fail(line_no, error);
                continue;
            }
            t.name = *name;
            if (!expect_kind(lex, Token::Kind::Colon, "':'", error)) {
                fail(line_no, error);
                continue;
            }
            auto src = expect_ident(lex, error);
            if (!src) {
                fail(line_no, error);
                continue;
            }
            if (!expect_kind(lex, Token::Kind::Arrow, "'->'", error)) {
                fail(line_no, error);
                continue;
            }
            auto dst = expect_ident(lex, error);
            if (!dst) {
                fail(line_no, error);
                continue;
            }
            t.src = *src;
            t.dst = *dst;
            auto nat = parse_vector(lex, "nat", model.dims.counters, error);
            if (!nat) {
                fail(line_no, error);
                continue;
            }
            auto wt = parse_vector(lex, "wt", model.dims.weights, error);
            if (!wt) {
                fail(line_no, error);
                continue;
            }
            if (!expect_end(lex, error)) {
                fail(line_no, error);
                continue;
            }
            t.counter_delta = std::move(*nat);
            t.weight_delta = std::move(*wt);
            if (!model.has_state(t.src)) {
                fail(line_no, "unknown state '" + t.src + "'");
            }
            if (t.dst != t.src && !model.has_state(t.dst)) {
                fail(line_no, "unknown state '" + t.dst + "'");
            }
            if (model.find_transition(t.name) != nullptr) {
                fail(line_no, "transition '" + t.name + "' declared twice");
            }
            model.transitions.push_back(std::move(t));
        } else {
            fail(line_no, "unknown directive '" + *keyword + "'");
        }
    }
    if (!saw_header) fail(line_no + 1, "missing model header line");
    if (result.errors.empty()) result.model = std::move(model);
    return result;
}

// ---------------------------------------------------------------------------
// Literals

std::optional<Config> parse_config(const Dims& dims, const std::string& text,
                                   std::string& error) {
    Lexer lex(text);
    auto state = expect_ident(lex, error);
    if (!state) return std::nullopt;
    auto counters = parse_vector(lex, "nat", dims.counters, error);
    if (!counters) return std::nullopt;
    auto weights = parse_vector(lex, "wt", dims.weights, error);
    if (!weights) return std::nullopt;
    if (!expect_end(lex, error)) return std::nullopt;
    for (std::int64_t n : *counters) {
        if (n < 0) {
            error = "counter values must be nonnegative";
            return std::nullopt;
        }
    }
    return Config{std::move(*state), std::move(*counters), std::move(*weights)};
}

namespace {

std::optional<CounterLimit> parse_counter_limit(Lexer& lex,
                                                std::string& error) {
    if (lex.peek().kind == Token::Kind::Ident && lex.peek().text == "omega") {
        lex.take();
        return CounterLimit::omega();
    }
    if (lex.peek().kind == Token::Kind::Int) {
        const std::int64_t v = lex.take().value;
        if (v < 0) {
            error = "counter limits must be nonnegative or 'omega'";
            return std::nullopt;
        }
        return CounterLimit::finite(v);
    }
    error = "expected a natural number or 'omega', got '" + lex.peek().text +
            "'";
    return std::nullopt;
}

std::optional<WeightLimit> parse_weight_limit(Lexer& lex, std::string& error) {
    if (lex.peek().kind == Token::Kind::PlusInf) {
        lex.take();
        return WeightLimit::plus_inf();
    }
    if (lex.peek().kind == Token::Kind::Int) {
        return WeightLimit::finite(lex.take().value);
    }
    error = "expected an integer or '+inf', got '" + lex.peek().text + "'";
    return std::nullopt;
}

} // namespace

std::optional<Ideal> parse_ideal(const Dims& dims, const std::string& text,
                                 std::string& error) {
    Lexer lex(text);
    auto state = expect_ident(lex, error);
    if (!state) return std::nullopt;
    if (!expect_kind(lex, Token::Kind::Colon, "':'", error)) return std::nullopt;
    if (!expect_keyword(lex, "nat", error)) return std::nullopt;
    auto u = parse_paren_list<CounterLimit>(lex, parse_counter_limit, error);
    if (!u) return std::nullopt;
    if (static_cast<int>(u->size()) != dims.counters) {
        error = "nat(...) has " + std::to_string(u->size()) +
                " entries, expected " + std::to_string(dims.counters);
        return std::nullopt;
    }
    if (!expect_keyword(lex, "wt", error)) return std::nullopt;
    auto m = parse_paren_list<WeightLimit>(lex, parse_weight_limit, error);
    if (!m) return std::nullopt;
    if (static_cast<int>(m->size()) != dims.weights) {
        error = "wt(...) has " + std::to_string(m->size()) +
                " entries, expected " + std::to_string(dims.weights);
        return std::nullopt;
    }
    if (!expect_end(lex, error)) return std::nullopt;
    return Ideal::canonical(std::move(*state), std::move(*u), std::move(*m));
}

std::optional<DownSet> parse_invariant_lines(const Dims& dims,
                                             const std::string& text,
                                             std::vector<ParseError>& errors) {
    std::vector<Ideal> ideals;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string trimmed = line;
        const std::size_t start = trimmed.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        trimmed = trimmed.substr(start);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("inv:", 0) == 0) trimmed = trimmed.substr(4);
        std::string error;
        auto ideal = parse_ideal(dims, trimmed, error);
        if (!ideal) {
            errors.push_back(ParseError{line_no, error});
            continue;
        }
        ideals.push_back(std::move(*ideal));
    }
    if (!errors.empty()) return std::nullopt;
    return minimize(dims, ideals);
}

// ---------------------------------------------------------------------------
// Reports

std::string render_cover_report(const CoverVerdict& verdict) {
    switch (verdict.kind) {
    case CoverVerdict::Kind::Coverable: {
        std::string out = "COVERABLE\nrun:";
        for (const std::string& name : verdict.run->transitions) {
            out += " " + name;
        }
        out += "\nend: " + render_config(*verdict.endpoint) + "\n";
        return out;
    }
    case CoverVerdict::Kind::NotCoverable: {
        std::string out = "NOT_COVERABLE\n";
        for (const Ideal& ideal : verdict.invariant->ideals()) {
            out += "inv: " + render_ideal(ideal) + "\n";
        }
        return out;
    }
    case CoverVerdict::Kind::Unknown:
        return "UNKNOWN budget=" + std::to_string(verdict.rounds) + "\n";
    }
    return {};
}

std::string render_witness_line(const ComparabilityWitness& witness,
                                bool strict) {
    const char* rel = strict ? "<" : "<=";
    std::string lhs;
    std::string rhs;
    if (witness.relation == AncestorRelation::Above) {
        lhs = render_config(witness.node_label);
        rhs = render_config(witness.ancestor_label);
    } else {
        lhs = render_config(witness.ancestor_label);
        rhs = render_config(witness.node_label);
    }
    std::string out = "witness: " + lhs + " " + rel + " " + rhs + " via path";
    for (const std::string& name : witness.path) out += " " + name;
    return out + "\n";
}

std::string render_termination_report(const TerminationVerdict& verdict) {
    if (verdict.terminates) return "TERMINATES\n";
    return "DOES_NOT_TERMINATE\n" + render_witness_line(*verdict.witness, false);
}

std::string render_boundedness_report(const BoundednessVerdict& verdict) {
    if (verdict.bounded) return "BOUNDED\n";
    return "UNBOUNDED\n" + render_witness_line(*verdict.witness, true);
}

std::string render_backward_report(const BackwardTrace& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.trace.size(); ++i) {
        out += "step " + std::to_string(i) + ": " + render_upset(trace.trace[i]) +
               "\n";
    }
    switch (trace.outcome) {
    case BackwardTrace::Outcome::CoverableBack:
        out += "COVERABLE_BACK step=" + std::to_string(trace.stopped_at) + "\n";
        break;
    case BackwardTrace::Outcome::StabilizedNotCoverable:
        out += "STABILIZED_NOT_COVERABLE step=" +
               std::to_string(trace.stopped_at) + "\n";
        break;
    case BackwardTrace::Outcome::Diverged:
        out += "DIVERGED steps=" + std::to_string(trace.stopped_at) + "\n";
        break;
    }
    return out;
}

std::string render_tree_dump(const AntichainTree& tree) {
    std::string out = "tree nodes: " + std::to_string(tree.nodes.size()) + "\n";
    for (const TreeNode& node : tree.nodes) {
        out += std::to_string(node.id);
        if (node.parent) {
            out += " <- " + std::to_string(*node.parent) + " via " +
                   node.via_transition;
        } else {
            out += " root";
        }
        out += ": " + render_config(node.label);
        switch (node.mark) {
        case TreeNode::Mark::Expanded:
            out += " [expanded]";
            break;
        case TreeNode::Mark::Leaf:
            out += " [leaf]";
            break;
        case TreeNode::Mark::Truncated:
            out += " [truncated: comparable to " +
                   std::to_string(*node.comparable_ancestor) + "]";
            break;
        }
        out += "\n";
    }
    return out;
}

} // namespace wvass
