#pragma once

#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/language_decision.hpp"
#include "wheeler/wheeler_order.hpp"

// Brute-force references. Deliberately naive and independent of the algorithms they check:
// only the automaton accessors and colex_compare are shared.
namespace wheeler::oracles {

/// Readable words of length ≤ max_len, colex sorted, no duplicates.
std::vector<Word> enumerate_prefixes(const StateLabeledNfa& a, std::size_t max_len);
std::vector<Word> enumerate_prefixes(const EdgeLabeledDfa& d, std::size_t max_len);

/// Accepted words of length ≤ max_len, colex sorted.
std::vector<Word> enumerate_language(const StateLabeledNfa& a, std::size_t max_len);
std::vector<Word> enumerate_language(const EdgeLabeledDfa& d, std::size_t max_len);

/// Words of length ≤ max_len that reach q, colex sorted.
std::vector<Word> incoming_words(const StateLabeledNfa& a, State q, std::size_t max_len);
/// Words of length ≤ max_len leading from q to a final state, colex sorted.
std::vector<Word> right_context(const EdgeLabeledDfa& d, State q, std::size_t max_len);

/// Every Wheeler order, tried over all permutations that put 0 first and keep label blocks in
/// rank order. Throws UsageError when the automaton has more than `max_states` states.
std::vector<WheelerOrder> exhaustive_wheeler_order(const StateLabeledNfa& a, std::size_t max_states = 8);

/// Pairs u < v, γ of length ≤ len_cap closing a cycle at both, and the colex-extremal shorter
/// words reaching u and v. Lengths ascending, then u, v, then γ in lexicographic order.
/// Finding nothing proves nothing beyond len_cap.
std::optional<NotWheelerWitness> bounded_witness_search(const EdgeLabeledDfa& d, std::size_t len_cap);

/// Classical powerset construction from {0}. Reachable subsets only, not trimmed.
EdgeLabeledDfa subset_construct(const StateLabeledNfa& a, std::size_t max_subsets = 100000);

/// For a unary DFA: is the language finite or co-finite? Throws UsageError if |Σ| ≠ 1.
bool unary_finite_or_cofinite(const EdgeLabeledDfa& d);

}  // namespace wheeler::oracles
