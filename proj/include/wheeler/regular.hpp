#pragma once

#include <string_view>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

inline constexpr Symbol kEpsilon = -2;

/// Edge-labeled NFA with ε-moves and any number of initial states. Plumbing for closure
/// operations and fixtures; nothing here is Wheeler-specific.
struct EdgeNfa {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<LabeledEdge> edges;  ///< symbol may be kEpsilon
    std::vector<State> initials;
    std::vector<State> finals;

    State add_state() { return static_cast<State>(states++); }
    void add_edge(State from, Symbol s, State to) { edges.push_back({from, s, to}); }
    /// Appends a copy of `d`; returns the offset of its state 0.
    State embed(const EdgeLabeledDfa& d);

    static EdgeNfa from_dfa(const EdgeLabeledDfa& d);
};

/// Subset construction with ε-closure, trimmed. Throws BudgetExceeded past `max_subsets`.
EdgeLabeledDfa determinize_nfa(const EdgeNfa& a, std::size_t max_subsets = 100000);

/// Minimum DFA of a regular expression: juxtaposition, `|`, `*`, `+`, `?` and parentheses over
/// the alphabet's characters; `()` is ε. Spaces are ignored. Throws UsageError on bad syntax.
EdgeLabeledDfa regex_dfa(const Alphabet& alphabet, std::string_view pattern);

}  // namespace wheeler
