#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wheeler/alphabet.hpp"

namespace wheeler {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

struct Edge {
    State from;
    State to;
    auto operator<=>(const Edge&) const = default;
};

struct LabeledEdge {
    State from;
    Symbol symbol;
    State to;
    auto operator<=>(const LabeledEdge&) const = default;
};

/// Input-consistent NFA: every edge into q reads labels()[q]. State 0 is initial and
/// carries kHash. The constructor only checks ids and ranks; validate() reports the rest.
class StateLabeledNfa {
public:
    StateLabeledNfa(Alphabet alphabet, std::vector<Symbol> labels, std::vector<Edge> edges,
                    std::vector<State> finals);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return labels_.size(); }
    Symbol label(State q) const { return labels_[q]; }
    const std::vector<Symbol>& labels() const noexcept { return labels_; }

    /// Sorted, duplicate free.
    std::span<const State> successors(State q) const { return succ_[q]; }
    std::span<const State> predecessors(State q) const { return pred_[q]; }

    bool is_final(State q) const { return final_[q]; }
    std::vector<State> finals() const;
    /// Sorted by (from, to).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// At most one successor per label from every state.
    bool is_deterministic() const;
    /// The successor of q reading `s`, if the automaton is deterministic there.
    State successor(State q, Symbol s) const;

    /// Same automaton with a different final set.
    StateLabeledNfa with_finals(std::vector<State> finals) const;

    bool operator==(const StateLabeledNfa& other) const = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> labels_;
    std::vector<std::vector<State>> succ_;
    std::vector<std::vector<State>> pred_;
    std::vector<bool> final_;
    std::size_t edge_count_ = 0;
};

/// Partial DFA with edge labels. Initial state is always 0.
class EdgeLabeledDfa {
public:
    /// Throws UsageError on two edges leaving one state with the same symbol.
    EdgeLabeledDfa(Alphabet alphabet, std::size_t states, const std::vector<LabeledEdge>& edges,
                   std::vector<State> finals);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return n_; }
    static constexpr State initial() noexcept { return 0; }

    /// kNoState when undefined.
    State next(State q, Symbol s) const { return delta_[q * k_ + static_cast<std::size_t>(s)]; }
    bool is_final(State q) const { return final_[q]; }
    std::vector<State> finals() const;
    /// Sorted by (from, symbol).
    std::vector<LabeledEdge> edges() const;
    std::size_t edge_count() const;

    bool operator==(const EdgeLabeledDfa& other) const = default;

private:
    Alphabet alphabet_;
    std::size_t n_;
    std::size_t k_;
    std::vector<State> delta_;
    std::vector<bool> final_;
};

enum class StructuralIssue {
    IncomingToInitial,
    InitialNotHash,
    HashOnNonInitial,
    NotReachable,
    NotCoReachable,
    EmptyLanguage,
};

struct StructuralViolation {
    StructuralIssue kind;
    State state;
    std::optional<Edge> edge;
    bool operator==(const StructuralViolation&) const = default;
};

const char* to_string(StructuralIssue kind) noexcept;
std::string describe(const StructuralViolation& v);

std::vector<StructuralViolation> validate(const StateLabeledNfa& a);
std::vector<StructuralViolation> validate(const EdgeLabeledDfa& d);

/// Drops states that are unreachable or cannot reach a final state, renumbering densely and
/// keeping the relative order of survivors. An empty language yields the one-state automaton
/// with no finals; check it with is_empty().
StateLabeledNfa trim(const StateLabeledNfa& a);
EdgeLabeledDfa trim(const EdgeLabeledDfa& d);

bool is_empty(const StateLabeledNfa& a);
bool is_empty(const EdgeLabeledDfa& d);

/// States become (original state, incoming symbol) pairs, numbered in BFS order. Pass
/// trimmed = false to keep dead states (e.g. the sink of a complete DFA).
StateLabeledNfa edge_to_state_labeled(const EdgeLabeledDfa& d, bool trimmed = true);
/// Keeps state numbering. Throws UsageError on nondeterministic input.
EdgeLabeledDfa state_to_edge_labeled(const StateLabeledNfa& a);

bool accepts(const StateLabeledNfa& a, const Word& w);
bool accepts(const EdgeLabeledDfa& d, const Word& w);

/// Adds one non-final sink (state n) absorbing every undefined transition. Not trimmed.
EdgeLabeledDfa complete_with_sink(const EdgeLabeledDfa& d);
/// Complement relative to alphabet*, trimmed.
EdgeLabeledDfa complement(const EdgeLabeledDfa& d);

/// The automaton accepting nothing: a lone non-final initial state.
EdgeLabeledDfa empty_dfa(const Alphabet& alphabet);

}  // namespace wheeler
