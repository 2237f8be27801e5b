#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

/// 2 + n + 2n² + n³. Lengths here are counted in symbols; a path of ℓ symbols has ℓ+1 nodes.
/// Throws UsageError for n = 0.
std::size_t decision_bound(std::size_t n);

/// 4 + 2n + 2n² + 2n³, the larger bound used by the search.
std::size_t search_bound(std::size_t n);

/// Colex-extremal path labels from the initial state, per length and target state.
struct PathRankTables {
    struct Entry {
        State pred = kNoState;  ///< state at the previous length; kNoState at length 0 or if undefined
        Symbol symbol = kHash;
        std::uint32_t rank = kUndefined;  ///< dense rank among the defined entries of this length
    };
    static constexpr std::uint32_t kUndefined = UINT32_MAX;

    std::size_t states = 0;
    std::size_t max_len = 0;
    std::vector<std::vector<Entry>> min;  ///< [length][state]
    std::vector<std::vector<Entry>> max;

    bool defined(State u, std::size_t len) const { return min[len][u].rank != kUndefined; }
    /// Smallest / largest label of a path with `len` symbols from 0 to u, if any.
    std::optional<Word> label_min(State u, std::size_t len) const;
    std::optional<Word> label_max(State u, std::size_t len) const;
};

PathRankTables build_path_tables(const EdgeLabeledDfa& d, std::size_t max_len);

/// Colex-extremal common labels of path pairs u ->* u2 and v ->* v2, for all 4-tuples.
/// Ranks are dense per length over all tuples, so any two labels of one length compare by rank.
struct PairRankTables {
    struct Entry {
        State pred_u = kNoState;
        State pred_v = kNoState;
        Symbol symbol = kHash;
        std::uint32_t rank = kUndefined;
    };
    static constexpr std::uint32_t kUndefined = UINT32_MAX;

    std::size_t states = 0;
    std::size_t max_len = 0;
    std::vector<Entry> max;  ///< flattened [length][u][u2][v][v2]
    std::vector<Entry> min;

    std::size_t index(std::size_t len, State u, State u2, State v, State v2) const {
        const std::size_t n = states;
        return (((len * n + u) * n + u2) * n + v) * n + v2;
    }
    std::optional<Word> label_max(State u, State u2, State v, State v2, std::size_t len) const;
    std::optional<Word> label_min(State u, State u2, State v, State v2, std::size_t len) const;
};

/// Full table. Throws BudgetExceeded when n⁴·(max_len+1) exceeds `budget`.
PairRankTables build_pair_tables(const EdgeLabeledDfa& d, std::size_t max_len,
                                 std::size_t budget = 200'000'000);

struct NotWheelerWitness {
    State u = 0;
    State v = 0;
    Word mu;
    Word nu;
    Word gamma;
};

/// States in the witness refer to minimize_dfa(d).
struct WheelerVerdict {
    bool wheeler = true;
    std::optional<NotWheelerWitness> witness;
    std::size_t min_states = 0;
    explicit operator bool() const noexcept { return wheeler; }
};

/// Polynomial decision on the minimum DFA of d. Pairs u < v are tried in order, |γ| ascending,
/// first up to decision_bound(n) and then up to search_bound(n). Throws BudgetExceeded if a pair
/// search would store more than `budget` entries.
WheelerVerdict decide_wheeler(const EdgeLabeledDfa& d, std::size_t budget = 200'000'000);

/// Checks the four witness conditions on a minimum DFA, with |γ| ≤ bound.
bool check_witness(const EdgeLabeledDfa& min_dfa, const NotWheelerWitness& w, std::size_t bound);

}  // namespace wheeler
