#pragma once

#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/wheeler_order.hpp"

namespace wheeler {

struct OrderedPartition {
    /// Each block is a sorted list of states; block order is the candidate Wheeler order.
    std::vector<std::vector<State>> blocks;
    std::vector<bool> reached;

    std::size_t size() const noexcept { return blocks.size(); }
    /// state -> index of its block
    std::vector<std::size_t> block_index(std::size_t states) const;
};

/// Counters for the refinement loop.
struct ForwardStats {
    std::size_t outer_iterations = 0;
    std::size_t modifier_steps = 0;
    std::size_t splits = 0;
};

/// Forward Algorithm. Starts from {0}, Q_a1, ..., Q_ak and refines until a full pass over the
/// modifiers splits nothing; the modifier scan restarts from the first block after a split.
OrderedPartition forward_stable_partition(const StateLabeledNfa& a, ForwardStats* stats = nullptr);

/// For every pair of blocks, the successors of the first either cover or miss the second.
bool is_forward_stable(const StateLabeledNfa& a, const OrderedPartition& p);

struct QuotientResult {
    StateLabeledNfa quotient;
    /// Quotient state i is block i, so this is the identity order.
    WheelerOrder order;
    std::vector<State> class_map;
};

/// Quotient over the forward-stable partition. The order is only a candidate.
QuotientResult quotient_sorted(const StateLabeledNfa& a);

enum class SortOutcome { Wheeler, NotWheeler, NotSingleton };

struct SortResult {
    SortOutcome outcome;
    /// Set for Wheeler and NotWheeler: the order induced by the singleton blocks.
    std::optional<WheelerOrder> order;
    std::vector<OrderViolation> violations;
    /// Blocks with two or more states (NotSingleton only).
    std::vector<std::vector<State>> merged_blocks;
};

const char* to_string(SortOutcome o) noexcept;

/// Decision for reduced automata. Non-reduced input shows up as NotSingleton.
SortResult recognize_sort_reduced(const StateLabeledNfa& a);

/// Groups states with equal incoming languages I_u, via the subset construction. Exponential in
/// the worst case; throws BudgetExceeded past `max_subsets` reachable subsets.
std::vector<std::vector<State>> incoming_language_classes(const StateLabeledNfa& a,
                                                          std::size_t max_subsets = 100000);

}  // namespace wheeler
