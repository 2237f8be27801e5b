#pragma once

#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/wheeler_order.hpp"

namespace wheeler {

/// An output state of the determinization: the positions (in the source order) of I_α.
struct IntervalState {
    StateInterval interval;
    Symbol label;
    bool operator==(const IntervalState&) const = default;
};

/// Deterministic automaton plus its order. State i sits at position i, so `order` is the
/// identity; `intervals[i]` is the source interval behind state i.
struct Determinization {
    StateLabeledNfa automaton;
    WheelerOrder order;
    std::vector<IntervalState> intervals;
};

/// Interval construction. Throws UsageError when `ord` fails check_wheeler or some alphabet
/// symbol labels no state.
Determinization wheeler_determinize(const StateLabeledNfa& a, const WheelerOrder& ord);

/// 2n - 1 - |Σ|
std::size_t determinization_bound(std::size_t states, std::size_t alphabet_size);

/// For every I ⊆ J in the family, I is a prefix or a suffix of J.
bool has_prefix_suffix_property(const std::vector<StateInterval>& family);

/// [0,n-1] together with all its proper prefixes and suffixes: 2n - 1 intervals.
std::vector<StateInterval> tight_interval_family(std::size_t n);

namespace detail {
/// The construction without precondition checks. Used on automata whose final set was changed
/// (the order stays Wheeler) and which may use only part of the alphabet.
Determinization interval_determinize(const StateLabeledNfa& a, const WheelerOrder& ord);
}  // namespace detail

}  // namespace wheeler
