#include "wheeler/wheeler_order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "wheeler/determinize.hpp"
#include "wheeler/dfa_ops.hpp"
#include "wheeler/error.hpp"

namespace wheeler {

WheelerOrder::WheelerOrder(std::vector<State> perm) : perm_(std::move(perm)), pos_(perm_.size(), SIZE_MAX) {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const State q = perm_[i];
        if (q >= perm_.size() || pos_[q] != SIZE_MAX)
            throw UsageError("order is not a permutation of 0.." + std::to_string(perm_.size() - 1));
        pos_[q] = i;
    }
}

WheelerOrder WheelerOrder::identity(std::size_t n) {
    std::vector<State> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<State>(i);
    return WheelerOrder(std::move(perm));
}

const char* to_string(OrderIssue kind) noexcept {
    switch (kind) {
        case OrderIssue::LabelOrder: return "LabelOrder";
        case OrderIssue::SameLabelMonotonicity: return "SameLabelMonotonicity";
        case OrderIssue::InitialNotMin: return "InitialNotMin";
        case OrderIssue::NotInputConsistent: return "NotInputConsistent";
    }
    return "?";
}

std::string describe(const OrderViolation& v) {
    std::string out = to_string(v.kind);
    for (const auto& e : v.edges) out += " " + std::to_string(e.from) + "->" + std::to_string(e.to);
    if (!v.states.empty()) {
        out += " states=";
        for (std::size_t i = 0; i < v.states.size(); ++i) out += (i ? "," : "") + std::to_string(v.states[i]);
    }
    return out;
}

std::vector<OrderViolation> check_wheeler(const StateLabeledNfa& a, const WheelerOrder& ord) {
    if (ord.size() != a.size())
        throw UsageError("order has " + std::to_string(ord.size()) + " states, automaton has " +
                         std::to_string(a.size()));
    std::vector<OrderViolation> out;

    if (a.label(0) != kHash) out.push_back({OrderIssue::NotInputConsistent, {}, {0}});
    for (State q = 1; q < a.size(); ++q)
        if (a.label(q) == kHash) out.push_back({OrderIssue::NotInputConsistent, {}, {q}});

    if (ord.at(0) != 0) out.push_back({OrderIssue::InitialNotMin, {}, {0}});
    for (State p : a.predecessors(0)) out.push_back({OrderIssue::InitialNotMin, {{p, 0}}, {0}});

    // Clause (i): only the targets matter, so one witness edge per target state.
    std::vector<State> targets;
    for (std::size_t p = 0; p < a.size(); ++p)
        if (!a.predecessors(ord.at(p)).empty()) targets.push_back(ord.at(p));
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            const State v1 = targets[j], v2 = targets[i];  // v1 sits after v2
            if (a.label(v1) < a.label(v2))
                out.push_back({OrderIssue::LabelOrder,
                               {{a.predecessors(v1).front(), v1}, {a.predecessors(v2).front(), v2}},
                               {v1, v2}});
        }

    // Clause (ii), per target label.
    std::map<Symbol, std::vector<Edge>> by_label;
    for (const auto& e : a.edges()) by_label[a.label(e.to)].push_back(e);
    for (auto& [label, edges] : by_label) {
        std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
            return std::pair(ord.pos(x.from), ord.pos(x.to)) < std::pair(ord.pos(y.from), ord.pos(y.to));
        });
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (ord.pos(edges[i].from) < ord.pos(edges[j].from) && ord.pos(edges[i].to) > ord.pos(edges[j].to))
                    out.push_back({OrderIssue::SameLabelMonotonicity, {edges[i], edges[j]}, {}});
    }

    auto key = [&](const OrderViolation& v) {
        std::vector<std::size_t> k{static_cast<std::size_t>(v.kind)};
        for (const auto& e : v.edges) {
            k.push_back(ord.pos(e.from));
            k.push_back(ord.pos(e.to));
        }
        for (State q : v.states) k.push_back(ord.pos(q));
        return k;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

bool is_wheeler_order(const StateLabeledNfa& a, const WheelerOrder& ord) { return check_wheeler(a, ord).empty(); }

StateInterval reach_interval(const StateLabeledNfa& a, const WheelerOrder& ord, const Word& w) {
    std::size_t lo = ord.pos(0), hi = lo;
    for (Symbol s : w) {
        if (!a.alphabet().contains(s)) return StateInterval::none();
        std::size_t nlo = SIZE_MAX, nhi = 0;
        for (std::size_t p = lo; p <= hi; ++p)
            for (State r : a.successors(ord.at(p)))
                if (a.label(r) == s) {
                    nlo = std::min(nlo, ord.pos(r));
                    nhi = std::max(nhi, ord.pos(r));
                }
        if (nlo == SIZE_MAX) return StateInterval::none();
        lo = nlo;
        hi = nhi;
    }
    return StateInterval::of(lo, hi);
}

std::vector<CounterexampleTriple> incoming_convexity_report(const StateLabeledNfa& a, const WheelerOrder& ord,
                                                            std::size_t max_len) {
    // Readable words with their reached state sets, breadth first.
    std::vector<std::pair<Word, std::vector<State>>> prefixes{{{}, {0}}};
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (prefixes[i].first.size() == max_len) continue;
        for (Symbol s = 0; s < static_cast<Symbol>(a.alphabet().size()); ++s) {
            std::set<State> next;
            for (State q : prefixes[i].second)
                for (State r : a.successors(q))
                    if (a.label(r) == s) next.insert(r);
            if (next.empty()) continue;
            Word w = prefixes[i].first;
            w.push_back(s);
            prefixes.push_back({std::move(w), {next.begin(), next.end()}});
        }
    }
    std::sort(prefixes.begin(), prefixes.end(),
              [](const auto& x, const auto& y) { return colex_less(x.first, y.first); });

    std::vector<CounterexampleTriple> out;
    for (std::size_t p = 0; p < a.size(); ++p) {
        const State u = ord.at(p);
        std::vector<bool> in(prefixes.size());
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            in[i] = std::binary_search(prefixes[i].second.begin(), prefixes[i].second.end(), u);
        std::size_t last_in = SIZE_MAX;
        std::vector<std::size_t> gap;
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
            if (!in[i]) {
                if (last_in != SIZE_MAX) gap.push_back(i);
                continue;
            }
            for (std::size_t b : gap) out.push_back({u, prefixes[last_in].first, prefixes[b].first, prefixes[i].first});
            gap.clear();
            last_in = i;
        }
    }
    return out;
}

bool is_reduced(const StateLabeledNfa& a, const WheelerOrder& ord) {
    if (auto v = check_wheeler(a, ord); !v.empty())
        throw UsageError("is_reduced: order is not a Wheeler order (" + describe(v.front()) + ")");
    std::vector<EdgeLabeledDfa> single;
    single.reserve(a.size());
    for (State u = 0; u < a.size(); ++u) {
        auto det = detail::interval_determinize(a.with_finals({u}), ord);
        single.push_back(trim(state_to_edge_labeled(det.automaton)));
    }
    for (State u = 0; u < a.size(); ++u)
        for (State v = u + 1; v < a.size(); ++v)
            if (language_equiv(single[u], single[v])) return false;
    return true;
}

bool order_isomorphic(const StateLabeledNfa& a, const WheelerOrder& ord_a, const StateLabeledNfa& b,
                      const WheelerOrder& ord_b) {
    if (a.size() != b.size() || !(a.alphabet() == b.alphabet())) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.label(ord_a.at(i)) != b.label(ord_b.at(i))) return false;
        if (a.is_final(ord_a.at(i)) != b.is_final(ord_b.at(i))) return false;
    }
    auto positional = [](const StateLabeledNfa& x, const WheelerOrder& o) {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (const auto& edge : x.edges()) e.push_back({o.pos(edge.from), o.pos(edge.to)});
        std::sort(e.begin(), e.end());
        return e;
    };
    return positional(a, ord_a) == positional(b, ord_b);
}

StateLabeledNfa renumber_by_order(const StateLabeledNfa& a, const WheelerOrder& ord) {
    std::vector<Symbol> labels(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) labels[i] = a.label(ord.at(i));
    std::vector<Edge> edges;
    for (const auto& e : a.edges())
        edges.push_back({static_cast<State>(ord.pos(e.from)), static_cast<State>(ord.pos(e.to))});
    std::vector<State> finals;
    for (State f : a.finals()) finals.push_back(static_cast<State>(ord.pos(f)));
    return StateLabeledNfa(a.alphabet(), std::move(labels), std::move(edges), std::move(finals));
}

}  // namespace wheeler
