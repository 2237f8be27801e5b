#pragma once

#include <cstdint>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/minimal_wdfa.hpp"

namespace wheeler {

/// Minimum DFA of a finite set of words.
EdgeLabeledDfa finite_dfa(const Alphabet& alphabet, const std::vector<Word>& words);

/// One state per prefix of w, ordered by colex order of the prefixes. Throws UsageError on ε.
OrderedNfa gen_path_automaton(const Alphabet& alphabet, const Word& w);

enum class IntervalKind { Open, ClosedLeft, ClosedRight, Closed, LeftRay, RightRay };

/// LeftRay is (−∞, hi); RightRay is (lo, +∞). Rays ignore the other endpoint.
struct IntervalSpec {
    IntervalKind kind = IntervalKind::Open;
    Word lo;
    Word hi;
};

const char* to_string(IntervalKind k) noexcept;

/// Minimum DFA of a colex interval. Built from
///   (−∞, α₁) = Σ⁺·{β ≺ α₁ : |β| = |α₁|} ∪ {γ ≺ α₁ : |γ| ≤ |α₁|}
///   (α₀, +∞) = Σ*·{β ≻ α₀ : |β| ≤ |α₀|} ∪ Σ⁺·α₀
/// intersected, with the endpoints added for the closed kinds. Throws UsageError on empty
/// endpoints, on α₀ ≻ α₁, or when the short-word sets would exceed a million words.
EdgeLabeledDfa gen_interval(const IntervalSpec& spec, const Alphabet& alphabet);

struct LmFamily {
    EdgeLabeledDfa dfa;  ///< 4m+5 states, one a-state and one b-state per level of each branch
    OrderedNfa wdfa;     ///< 1+2^{m+2} states, order = colex order of the incoming words
};

/// L_m = c{a,b}^m e ∪ d{a,b}^m f over the alphabet "abcdef". Throws UsageError unless 1 ≤ m ≤ 4.
LmFamily gen_Lm(std::size_t m);

/// L(d)·F, minimized.
EdgeLabeledDfa concat_finite(const EdgeLabeledDfa& d, const std::vector<Word>& words);
/// L(d) ∪ F, minimized.
EdgeLabeledDfa union_finite(const EdgeLabeledDfa& d, const std::vector<Word>& words);

/// All states final; for a trimmed automaton this accepts Pref(L).
OrderedNfa pref_closure(const OrderedNfa& w);
/// Final set complemented. On a trimmed WDFA this accepts Pref(L) ∖ L.
OrderedNfa pref_minus(const OrderedNfa& w);

/// False iff w = βⁱ for some β and i > 1. Throws UsageError on ε.
bool is_primitive(const Word& w);

/// Minimum DFA of α₁·α*·α₂. Throws UsageError if α is empty.
EdgeLabeledDfa gen_star_family(const Alphabet& alphabet, const Word& a1, const Word& a, const Word& a2);

/// Unary lasso over "a": a^i moves to state i for i < tail + cycle, then wraps to `tail`.
/// cycle = 0 gives a finite chain. `finals` are state indices.
EdgeLabeledDfa gen_unary(std::size_t tail, std::size_t cycle, const std::vector<State>& finals);

// Plumbing for the non-closure fixtures.
EdgeLabeledDfa concat(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2);
EdgeLabeledDfa suffix_closure(const EdgeLabeledDfa& d);
EdgeLabeledDfa factor_closure(const EdgeLabeledDfa& d);

/// Random partial DFA, trimmed (not minimized). Each transition is present with probability
/// `density`; each state is final with probability 0.3 (state n-1 always is).
EdgeLabeledDfa random_dfa(const Alphabet& alphabet, std::size_t states, std::uint64_t seed, double density = 0.6);

/// Random Wheeler NFA with its order: states are created in order, every edge respects the
/// axioms by construction. `states` counts the initial state.
OrderedNfa random_wnfa(const Alphabet& alphabet, std::size_t states, std::uint64_t seed, double density = 0.35);

}  // namespace wheeler
