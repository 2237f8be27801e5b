#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "wheeler/automaton.hpp"
#include "wheeler/wheeler_order.hpp"

namespace wheeler {

/// Parsed `.aut` file.
///
///     type: state-labeled | edge-labeled
///     alphabet: a b c        # listing order is the symbol order
///     states: N
///     initial: 0
///     final: i j ...
///     label: q sym           # state-labeled, one per state 1..N-1
///     trans: p q             # state-labeled
///     trans: p sym q         # edge-labeled
///     order: q0 q1 ...       # optional, ascending, q0 = 0
///
/// `#` starts a comment.
struct AutFile {
    std::variant<StateLabeledNfa, EdgeLabeledDfa> automaton;
    std::optional<WheelerOrder> order;

    bool state_labeled() const { return automaton.index() == 0; }
    const StateLabeledNfa& nfa() const { return std::get<StateLabeledNfa>(automaton); }
    const EdgeLabeledDfa& dfa() const { return std::get<EdgeLabeledDfa>(automaton); }
};

/// Throws ParseError with the line and column of the offending token.
AutFile parse_aut(std::string_view text);

/// Canonical text: fixed header order, body lines sorted by state ids.
std::string serialize_aut(const StateLabeledNfa& a, const std::optional<WheelerOrder>& order = std::nullopt);
std::string serialize_aut(const EdgeLabeledDfa& d);
std::string serialize_aut(const AutFile& f);

/// Deterministic DOT. With an order, nodes carry their position as `order=` and in the label.
std::string export_dot(const StateLabeledNfa& a, const std::optional<WheelerOrder>& order = std::nullopt);
std::string export_dot(const EdgeLabeledDfa& d);

}  // namespace wheeler
