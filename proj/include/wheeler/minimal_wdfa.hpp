#pragma once

#include <cstdint>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/wheeler_order.hpp"

namespace wheeler {

/// An automaton together with a (claimed) Wheeler order.
struct OrderedNfa {
    StateLabeledNfa automaton;
    WheelerOrder order;
};

/// Myhill-Nerode classes of a deterministic state-labeled automaton. States that cannot reach a
/// final state share one class.
struct MnPartition {
    std::vector<std::uint32_t> class_of;
    std::size_t classes = 0;
};

MnPartition mn_partition(const StateLabeledNfa& w);

/// Maximal range of positions with one label and one MN class.
struct ColexRun {
    std::size_t lo;
    std::size_t hi;
    Symbol label;
    std::uint32_t mn_class;
    bool operator==(const ColexRun&) const = default;
};

std::vector<ColexRun> colex_runs(const StateLabeledNfa& w, const WheelerOrder& ord, const MnPartition& mn);

/// Merges every maximal run. Output state i sits at position i. Throws UsageError if `w` is not
/// deterministic or `ord` fails check_wheeler.
OrderedNfa minimize_wdfa(const StateLabeledNfa& w, const WheelerOrder& ord);

struct MinWdfaReport {
    OrderedNfa wdfa;
    std::size_t depth = 0;           ///< depth of the accepted attempt
    std::size_t runs = 0;            ///< runs seen at that depth
    std::vector<std::size_t> tried;  ///< run counts of all attempts, in order
};

/// Minimum WDFA for L(d). Pref(L) is explored in colex order up to `depth` (0 selects
/// 2 + n + 2n² + n³ for the minimum DFA size n), each prefix tagged with its minimum-DFA state and
/// last symbol; maximal runs of equal tags become states. Every candidate is validated
/// (Wheeler order, language, minimality); failures retry at double depth up to 4x the first depth.
/// Throws NotWheelerInput or DepthExhausted when no attempt validates.
OrderedNfa min_wdfa_from_dfa(const EdgeLabeledDfa& d, std::size_t depth = 0);
MinWdfaReport min_wdfa_from_dfa_report(const EdgeLabeledDfa& d, std::size_t depth = 0,
                                       std::size_t run_budget = 20'000'000);

}  // namespace wheeler
