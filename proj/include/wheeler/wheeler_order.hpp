#pragma once

#include <string>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

/// A total order on states, stored as perm (position -> state) and pos (state -> position).
class WheelerOrder {
public:
    /// Throws UsageError unless `perm` is a permutation of 0..n-1.
    explicit WheelerOrder(std::vector<State> perm);
    static WheelerOrder identity(std::size_t n);

    std::size_t size() const noexcept { return perm_.size(); }
    const std::vector<State>& perm() const noexcept { return perm_; }
    State at(std::size_t position) const { return perm_[position]; }
    std::size_t pos(State q) const { return pos_[q]; }

    bool operator==(const WheelerOrder& o) const noexcept { return perm_ == o.perm_; }

private:
    std::vector<State> perm_;
    std::vector<std::size_t> pos_;
};

/// Inclusive range of positions; `empty` overrides lo/hi.
struct StateInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool empty = true;

    static StateInterval none() { return {}; }
    static StateInterval of(std::size_t lo, std::size_t hi) { return {lo, hi, false}; }
    std::size_t length() const { return empty ? 0 : hi - lo + 1; }
    bool contains(std::size_t p) const { return !empty && lo <= p && p <= hi; }
    bool operator==(const StateInterval&) const = default;
};

enum class OrderIssue { LabelOrder, SameLabelMonotonicity, InitialNotMin, NotInputConsistent };

/// LabelOrder and SameLabelMonotonicity carry the two offending edges. InitialNotMin carries the
/// initial state and, when present, an edge entering it. NotInputConsistent names a state.
struct OrderViolation {
    OrderIssue kind;
    std::vector<Edge> edges;
    std::vector<State> states;
    bool operator==(const OrderViolation&) const = default;
};

const char* to_string(OrderIssue kind) noexcept;
std::string describe(const OrderViolation& v);

/// All violations of the Wheeler axioms, sorted by kind and then by positions of the witnesses.
std::vector<OrderViolation> check_wheeler(const StateLabeledNfa& a, const WheelerOrder& ord);
bool is_wheeler_order(const StateLabeledNfa& a, const WheelerOrder& ord);

/// Positions of δ(0, w). Requires a Wheeler order; empty when w cannot be read.
StateInterval reach_interval(const StateLabeledNfa& a, const WheelerOrder& ord, const Word& w);

/// α ≺ β ≺ γ with α, γ reaching `state` and β not, all within the enumerated prefixes.
struct CounterexampleTriple {
    State state;
    Word alpha, beta, gamma;
    bool operator==(const CounterexampleTriple&) const = default;
};

/// For each state u and each enumerated prefix β that falls inside the colex hull of I_u without
/// reaching u, reports β with its nearest members of I_u on both sides. States are visited in
/// `ord` order. Prefixes up to `max_len` only.
std::vector<CounterexampleTriple> incoming_convexity_report(const StateLabeledNfa& a, const WheelerOrder& ord,
                                                            std::size_t max_len = 8);

/// True iff distinct states have distinct incoming languages. Each pair is decided by
/// Wheeler-determinizing the automata with finals {u} and {v} and comparing languages.
/// Throws UsageError if `ord` is not a Wheeler order.
bool is_reduced(const StateLabeledNfa& a, const WheelerOrder& ord);

/// Does mapping position i of `ord_a` to position i of `ord_b` carry one automaton onto the other?
bool order_isomorphic(const StateLabeledNfa& a, const WheelerOrder& ord_a, const StateLabeledNfa& b,
                      const WheelerOrder& ord_b);

/// Renumbers states so that state i sits at position i.
StateLabeledNfa renumber_by_order(const StateLabeledNfa& a, const WheelerOrder& ord);

}  // namespace wheeler
