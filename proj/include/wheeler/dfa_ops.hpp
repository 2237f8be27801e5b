#pragma once

#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

enum class ProductMode { Intersect, Union };

/// Synchronous product, trimmed. Union treats a missing transition as an implicit sink.
EdgeLabeledDfa product_dfa(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2, ProductMode mode);

/// Myhill-Nerode classes of the states of a partial DFA. Missing transitions and states that
/// cannot reach a final state form one reject class. Class ids are dense, by first occurrence.
std::vector<std::uint32_t> myhill_nerode_classes(const EdgeLabeledDfa& d);

/// Minimum partial DFA, trimmed first. States are numbered in BFS order from the initial
/// state with symbols visited in rank order, so equal languages give equal objects.
EdgeLabeledDfa minimize_dfa(const EdgeLabeledDfa& d);

struct Equivalence {
    bool equal = true;
    /// Shortest distinguishing word (rank-order BFS); empty when equal.
    std::optional<Word> witness;
    explicit operator bool() const noexcept { return equal; }
};

/// Throws UsageError if the alphabets differ.
Equivalence language_equiv(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2);

/// Structural isomorphism preserving the initial state (both inputs must be reachable).
bool isomorphic(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2);

}  // namespace wheeler
