#include "wheeler/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "wheeler/error.hpp"

namespace wheeler {

namespace {

void check_state(std::size_t n, State q, const char* what) {
    if (q >= n) throw UsageError(std::string(what) + " state " + std::to_string(q) + " out of range (n=" + std::to_string(n) + ")");
}

template <class Next>
std::vector<bool> forward_closure(std::size_t n, const std::vector<State>& seeds, Next&& next) {
    std::vector<bool> seen(n, false);
    std::vector<State> stack;
    for (State s : seeds)
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        next(q, [&](State r) {
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        });
    }
    return seen;
}

std::vector<bool> reachable(const StateLabeledNfa& a) {
    return forward_closure(a.size(), {0}, [&](State q, auto&& visit) {
        for (State r : a.successors(q)) visit(r);
    });
}

std::vector<bool> coreachable(const StateLabeledNfa& a) {
    return forward_closure(a.size(), a.finals(), [&](State q, auto&& visit) {
        for (State r : a.predecessors(q)) visit(r);
    });
}

std::vector<bool> reachable(const EdgeLabeledDfa& d) {
    return forward_closure(d.size(), {0}, [&](State q, auto&& visit) {
        for (Symbol s = 0; s < static_cast<Symbol>(d.alphabet().size()); ++s)
            if (State r = d.next(q, s); r != kNoState) visit(r);
    });
}

std::vector<bool> coreachable(const EdgeLabeledDfa& d) {
    std::vector<std::vector<State>> pred(d.size());
    for (const auto& e : d.edges()) pred[e.to].push_back(e.from);
    return forward_closure(d.size(), d.finals(), [&](State q, auto&& visit) {
        for (State r : pred[q]) visit(r);
    });
}

}  // namespace

// ---------------------------------------------------------------- StateLabeledNfa

StateLabeledNfa::StateLabeledNfa(Alphabet alphabet, std::vector<Symbol> labels, std::vector<Edge> edges,
                                 std::vector<State> finals)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw UsageError("automaton needs at least the initial state");
    for (std::size_t q = 0; q < n; ++q)
        if (labels_[q] != kHash && !alphabet_.contains(labels_[q]))
            throw UsageError("label of state " + std::to_string(q) + " is not an alphabet rank");
    succ_.assign(n, {});
    pred_.assign(n, {});
    final_.assign(n, false);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
        check_state(n, e.from, "edge source");
        check_state(n, e.to, "edge target");
        succ_[e.from].push_back(e.to);
        pred_[e.to].push_back(e.from);
    }
    for (auto& p : pred_) std::sort(p.begin(), p.end());
    edge_count_ = edges.size();
    for (State f : finals) {
        check_state(n, f, "final");
        final_[f] = true;
    }
}

std::vector<State> StateLabeledNfa::finals() const {
    std::vector<State> out;
    for (State q = 0; q < size(); ++q)
        if (final_[q]) out.push_back(q);
    return out;
}

std::vector<Edge> StateLabeledNfa::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (State q = 0; q < size(); ++q)
        for (State r : succ_[q]) out.push_back({q, r});
    return out;
}

bool StateLabeledNfa::is_deterministic() const {
    for (State q = 0; q < size(); ++q) {
        std::vector<Symbol> seen;
        for (State r : succ_[q]) seen.push_back(labels_[r]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

State StateLabeledNfa::successor(State q, Symbol s) const {
    for (State r : succ_[q])
        if (labels_[r] == s) return r;
    return kNoState;
}

StateLabeledNfa StateLabeledNfa::with_finals(std::vector<State> finals) const {
    return StateLabeledNfa(alphabet_, labels_, edges(), std::move(finals));
}

// ---------------------------------------------------------------- EdgeLabeledDfa

EdgeLabeledDfa::EdgeLabeledDfa(Alphabet alphabet, std::size_t states, const std::vector<LabeledEdge>& edges,
                               std::vector<State> finals)
    : alphabet_(std::move(alphabet)), n_(states), k_(alphabet_.size()) {
    if (n_ == 0) throw UsageError("DFA needs at least the initial state");
    delta_.assign(n_ * k_, kNoState);
    final_.assign(n_, false);
    for (const auto& e : edges) {
        check_state(n_, e.from, "edge source");
        check_state(n_, e.to, "edge target");
        if (!alphabet_.contains(e.symbol))
            throw UsageError("edge from " + std::to_string(e.from) + " has a symbol outside the alphabet");
        State& slot = delta_[e.from * k_ + static_cast<std::size_t>(e.symbol)];
        if (slot != kNoState && slot != e.to)
            throw UsageError("nondeterministic edges from state " + std::to_string(e.from) + " on '" +
                             alphabet_.symbol(e.symbol) + "'");
        slot = e.to;
    }
    for (State f : finals) {
        check_state(n_, f, "final");
        final_[f] = true;
    }
}

std::vector<State> EdgeLabeledDfa::finals() const {
    std::vector<State> out;
    for (State q = 0; q < n_; ++q)
        if (final_[q]) out.push_back(q);
    return out;
}

std::vector<LabeledEdge> EdgeLabeledDfa::edges() const {
    std::vector<LabeledEdge> out;
    for (State q = 0; q < n_; ++q)
        for (std::size_t s = 0; s < k_; ++s)
            if (State r = delta_[q * k_ + s]; r != kNoState) out.push_back({q, static_cast<Symbol>(s), r});
    return out;
}

std::size_t EdgeLabeledDfa::edge_count() const {
    return static_cast<std::size_t>(std::count_if(delta_.begin(), delta_.end(), [](State r) { return r != kNoState; }));
}

// ---------------------------------------------------------------- validation

const char* to_string(StructuralIssue kind) noexcept {
    switch (kind) {
        case StructuralIssue::IncomingToInitial: return "IncomingToInitial";
        case StructuralIssue::InitialNotHash: return "InitialNotHash";
        case StructuralIssue::HashOnNonInitial: return "HashOnNonInitial";
        case StructuralIssue::NotReachable: return "NotReachable";
        case StructuralIssue::NotCoReachable: return "NotCoReachable";
        case StructuralIssue::EmptyLanguage: return "EmptyLanguage";
    }
    return "?";
}

std::string describe(const StructuralViolation& v) {
    std::string out = std::string(to_string(v.kind)) + " state=" + std::to_string(v.state);
    if (v.edge) out += " edge=" + std::to_string(v.edge->from) + "->" + std::to_string(v.edge->to);
    return out;
}

namespace {

void reachability_issues(const std::vector<bool>& reach, const std::vector<bool>& coreach,
                         std::vector<StructuralViolation>& out) {
    if (!coreach[0]) out.push_back({StructuralIssue::EmptyLanguage, 0, std::nullopt});
    for (State q = 0; q < reach.size(); ++q) {
        if (!reach[q]) out.push_back({StructuralIssue::NotReachable, q, std::nullopt});
        if (!coreach[q]) out.push_back({StructuralIssue::NotCoReachable, q, std::nullopt});
    }
}

}  // namespace

std::vector<StructuralViolation> validate(const StateLabeledNfa& a) {
    std::vector<StructuralViolation> out;
    if (a.label(0) != kHash) out.push_back({StructuralIssue::InitialNotHash, 0, std::nullopt});
    for (State q = 1; q < a.size(); ++q)
        if (a.label(q) == kHash) out.push_back({StructuralIssue::HashOnNonInitial, q, std::nullopt});
    for (State p : a.predecessors(0)) out.push_back({StructuralIssue::IncomingToInitial, 0, Edge{p, 0}});
    reachability_issues(reachable(a), coreachable(a), out);
    return out;
}

std::vector<StructuralViolation> validate(const EdgeLabeledDfa& d) {
    std::vector<StructuralViolation> out;
    reachability_issues(reachable(d), coreachable(d), out);
    return out;
}

bool is_empty(const StateLabeledNfa& a) { return !coreachable(a)[0]; }
bool is_empty(const EdgeLabeledDfa& d) { return !coreachable(d)[0]; }

// ---------------------------------------------------------------- trim

StateLabeledNfa trim(const StateLabeledNfa& a) {
    auto reach = reachable(a);
    auto co = coreachable(a);
    if (!co[0]) return StateLabeledNfa(a.alphabet(), {a.label(0)}, {}, {});
    std::vector<State> map(a.size(), kNoState);
    std::vector<Symbol> labels;
    for (State q = 0; q < a.size(); ++q)
        if (reach[q] && co[q]) {
            map[q] = static_cast<State>(labels.size());
            labels.push_back(a.label(q));
        }
    std::vector<Edge> edges;
    for (const auto& e : a.edges())
        if (map[e.from] != kNoState && map[e.to] != kNoState) edges.push_back({map[e.from], map[e.to]});
    std::vector<State> finals;
    for (State f : a.finals())
        if (map[f] != kNoState) finals.push_back(map[f]);
    return StateLabeledNfa(a.alphabet(), std::move(labels), std::move(edges), std::move(finals));
}

EdgeLabeledDfa trim(const EdgeLabeledDfa& d) {
    auto reach = reachable(d);
    auto co = coreachable(d);
    if (!co[0]) return empty_dfa(d.alphabet());
    std::vector<State> map(d.size(), kNoState);
    State next = 0;
    for (State q = 0; q < d.size(); ++q)
        if (reach[q] && co[q]) map[q] = next++;
    std::vector<LabeledEdge> edges;
    for (const auto& e : d.edges())
        if (map[e.from] != kNoState && map[e.to] != kNoState) edges.push_back({map[e.from], e.symbol, map[e.to]});
    std::vector<State> finals;
    for (State f : d.finals())
        if (map[f] != kNoState) finals.push_back(map[f]);
    return EdgeLabeledDfa(d.alphabet(), next, edges, std::move(finals));
}

EdgeLabeledDfa empty_dfa(const Alphabet& alphabet) { return EdgeLabeledDfa(alphabet, 1, {}, {}); }

// ---------------------------------------------------------------- conversions

StateLabeledNfa edge_to_state_labeled(const EdgeLabeledDfa& d, bool trimmed) {
    // key: (dfa state, incoming symbol); the initial pair uses kHash.
    std::map<std::pair<State, Symbol>, State> id;
    std::vector<std::pair<State, Symbol>> pairs;
    std::vector<Edge> edges;
    id[{0, kHash}] = 0;
    pairs.push_back({0, kHash});
    const auto k = static_cast<Symbol>(d.alphabet().size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const State q = pairs[i].first;
        for (Symbol s = 0; s < k; ++s) {
            State r = d.next(q, s);
            if (r == kNoState) continue;
            auto [it, inserted] = id.try_emplace({r, s}, static_cast<State>(pairs.size()));
            if (inserted) pairs.push_back({r, s});
            edges.push_back({static_cast<State>(i), it->second});
        }
    }
    std::vector<Symbol> labels;
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        labels.push_back(pairs[i].second);
        if (d.is_final(pairs[i].first)) finals.push_back(static_cast<State>(i));
    }
    StateLabeledNfa a(d.alphabet(), std::move(labels), std::move(edges), std::move(finals));
    return trimmed ? trim(a) : a;
}

EdgeLabeledDfa state_to_edge_labeled(const StateLabeledNfa& a) {
    if (!a.is_deterministic()) throw UsageError("state_to_edge_labeled: input is not deterministic");
    std::vector<LabeledEdge> edges;
    for (const auto& e : a.edges()) {
        if (a.label(e.to) == kHash)
            throw UsageError("state_to_edge_labeled: edge into a #-labelled state");
        edges.push_back({e.from, a.label(e.to), e.to});
    }
    return EdgeLabeledDfa(a.alphabet(), a.size(), edges, a.finals());
}

// ---------------------------------------------------------------- acceptance

bool accepts(const StateLabeledNfa& a, const Word& w) {
    std::vector<State> current{0};
    std::vector<bool> mark(a.size());
    for (Symbol s : w) {
        if (!a.alphabet().contains(s)) return false;
        std::vector<State> next;
        std::fill(mark.begin(), mark.end(), false);
        for (State q : current)
            for (State r : a.successors(q))
                if (a.label(r) == s && !mark[r]) {
                    mark[r] = true;
                    next.push_back(r);
                }
        if (next.empty()) return false;
        current.swap(next);
    }
    return std::any_of(current.begin(), current.end(), [&](State q) { return a.is_final(q); });
}

bool accepts(const EdgeLabeledDfa& d, const Word& w) {
    State q = 0;
    for (Symbol s : w) {
        if (!d.alphabet().contains(s)) return false;
        q = d.next(q, s);
        if (q == kNoState) return false;
    }
    return d.is_final(q);
}

// ---------------------------------------------------------------- completion

EdgeLabeledDfa complete_with_sink(const EdgeLabeledDfa& d) {
    const auto sink = static_cast<State>(d.size());
    const auto k = static_cast<Symbol>(d.alphabet().size());
    std::vector<LabeledEdge> edges;
    for (State q = 0; q <= sink; ++q)
        for (Symbol s = 0; s < k; ++s) {
            State r = q == sink ? kNoState : d.next(q, s);
            edges.push_back({q, s, r == kNoState ? sink : r});
        }
    return EdgeLabeledDfa(d.alphabet(), d.size() + 1, edges, d.finals());
}

EdgeLabeledDfa complement(const EdgeLabeledDfa& d) {
    auto full = complete_with_sink(d);
    std::vector<State> finals;
    for (State q = 0; q < full.size(); ++q)
        if (!full.is_final(q)) finals.push_back(q);
    return trim(EdgeLabeledDfa(full.alphabet(), full.size(), full.edges(), std::move(finals)));
}

}  // namespace wheeler
