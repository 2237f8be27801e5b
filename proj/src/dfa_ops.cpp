#include "wheeler/dfa_ops.hpp"

#include <algorithm>
#include <map>

#include "wheeler/error.hpp"

namespace wheeler {

namespace {

void require_same_alphabet(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2, const char* op) {
    if (!(d1.alphabet() == d2.alphabet()))
        throw UsageError(std::string(op) + ": alphabets differ ('" + d1.alphabet().to_string() + "' vs '" +
                         d2.alphabet().to_string() + "')");
}

}  // namespace

EdgeLabeledDfa product_dfa(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2, ProductMode mode) {
    require_same_alphabet(d1, d2, "product_dfa");
    const auto k = static_cast<Symbol>(d1.alphabet().size());
    std::map<std::pair<State, State>, State> id;
    std::vector<std::pair<State, State>> pairs{{0, 0}};
    id[{0, 0}] = 0;
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        for (Symbol s = 0; s < k; ++s) {
            State p2 = p == kNoState ? kNoState : d1.next(p, s);
            State q2 = q == kNoState ? kNoState : d2.next(q, s);
            if (mode == ProductMode::Intersect ? (p2 == kNoState || q2 == kNoState)
                                               : (p2 == kNoState && q2 == kNoState))
                continue;
            auto [it, inserted] = id.try_emplace({p2, q2}, static_cast<State>(pairs.size()));
            if (inserted) pairs.push_back({p2, q2});
            edges.push_back({static_cast<State>(i), s, it->second});
        }
    }
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        bool f1 = p != kNoState && d1.is_final(p);
        bool f2 = q != kNoState && d2.is_final(q);
        if (mode == ProductMode::Intersect ? (f1 && f2) : (f1 || f2)) finals.push_back(static_cast<State>(i));
    }
    return trim(EdgeLabeledDfa(d1.alphabet(), pairs.size(), edges, std::move(finals)));
}

std::vector<std::uint32_t> myhill_nerode_classes(const EdgeLabeledDfa& d) {
    const std::size_t n = d.size();
    const auto k = static_cast<Symbol>(d.alphabet().size());
    // States that cannot reach a final state behave like the implicit reject class.
    std::vector<std::vector<State>> pred(n);
    for (const auto& e : d.edges()) pred[e.to].push_back(e.from);
    std::vector<bool> live(n, false);
    std::vector<State> stack = d.finals();
    for (State f : stack) live[f] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : pred[q])
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<std::uint32_t> cls(n);
    for (State q = 0; q < n; ++q) cls[q] = !live[q] ? 2 : d.is_final(q) ? 1 : 0;
    std::size_t count = 0;
    // Moore refinement: split by (class, class of each successor) until stable.
    while (true) {
        std::map<std::vector<std::int64_t>, std::uint32_t> sig_id;
        std::vector<std::uint32_t> next(n);
        for (State q = 0; q < n; ++q) {
            std::vector<std::int64_t> sig{cls[q]};
            if (live[q])
                for (Symbol s = 0; s < k; ++s) {
                    State r = d.next(q, s);
                    sig.push_back(r == kNoState || !live[r] ? -1 : static_cast<std::int64_t>(cls[r]));
                }
            auto [it, _] = sig_id.try_emplace(std::move(sig), static_cast<std::uint32_t>(sig_id.size()));
            next[q] = it->second;
        }
        cls.swap(next);
        if (sig_id.size() == count) break;
        count = sig_id.size();
    }
    // renumber by first occurrence for stable ids
    std::vector<std::uint32_t> remap(n, UINT32_MAX);
    std::uint32_t fresh = 0;
    for (State q = 0; q < n; ++q) {
        if (remap[cls[q]] == UINT32_MAX) remap[cls[q]] = fresh++;
        cls[q] = remap[cls[q]];
    }
    return cls;
}

EdgeLabeledDfa minimize_dfa(const EdgeLabeledDfa& input) {
    const EdgeLabeledDfa d = trim(input);
    if (is_empty(d)) return empty_dfa(d.alphabet());
    const auto cls = myhill_nerode_classes(d);
    const auto k = static_cast<Symbol>(d.alphabet().size());
    // one representative per class
    std::uint32_t classes = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<State> rep(classes, kNoState);
    for (State q = 0; q < d.size(); ++q)
        if (rep[cls[q]] == kNoState) rep[cls[q]] = q;
    std::vector<State> order_id(classes, kNoState);
    std::vector<std::uint32_t> queue{cls[0]};
    order_id[cls[0]] = 0;
    std::vector<LabeledEdge> edges;
    std::vector<State> finals;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const State q = rep[queue[i]];
        if (d.is_final(q)) finals.push_back(static_cast<State>(i));
        for (Symbol s = 0; s < k; ++s) {
            State r = d.next(q, s);
            if (r == kNoState) continue;
            auto c = cls[r];
            if (order_id[c] == kNoState) {
                order_id[c] = static_cast<State>(queue.size());
                queue.push_back(c);
            }
            edges.push_back({static_cast<State>(i), s, order_id[c]});
        }
    }
    return EdgeLabeledDfa(d.alphabet(), queue.size(), edges, std::move(finals));
}

Equivalence language_equiv(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2) {
    require_same_alphabet(d1, d2, "language_equiv");
    const auto k = static_cast<Symbol>(d1.alphabet().size());
    struct Node {
        State p, q;
        std::size_t parent;
        Symbol via;
    };
    std::vector<Node> nodes{{0, 0, 0, kHash}};
    std::map<std::pair<State, State>, std::size_t> seen{{{0, 0}, 0}};
    auto final_of = [](const EdgeLabeledDfa& d, State q) { return q != kNoState && d.is_final(q); };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, q, parent, via] = nodes[i];
        if (final_of(d1, p) != final_of(d2, q)) {
            Word w;
            for (std::size_t j = i; j != 0; j = nodes[j].parent) w.push_back(nodes[j].via);
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
        }
        for (Symbol s = 0; s < k; ++s) {
            State p2 = p == kNoState ? kNoState : d1.next(p, s);
            State q2 = q == kNoState ? kNoState : d2.next(q, s);
            if (p2 == kNoState && q2 == kNoState) continue;
            if (seen.try_emplace({p2, q2}, nodes.size()).second) nodes.push_back({p2, q2, i, s});
        }
    }
    return {true, std::nullopt};
}

bool isomorphic(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2) {
    if (!(d1.alphabet() == d2.alphabet()) || d1.size() != d2.size()) return false;
    const auto k = static_cast<Symbol>(d1.alphabet().size());
    std::vector<State> fwd(d1.size(), kNoState), bwd(d2.size(), kNoState);
    std::vector<State> queue{0};
    fwd[0] = 0;
    bwd[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        State p = queue[i], q = fwd[p];
        if (d1.is_final(p) != d2.is_final(q)) return false;
        for (Symbol s = 0; s < k; ++s) {
            State p2 = d1.next(p, s), q2 = d2.next(q, s);
            if ((p2 == kNoState) != (q2 == kNoState)) return false;
            if (p2 == kNoState) continue;
            if (fwd[p2] == kNoState && bwd[q2] == kNoState) {
                fwd[p2] = q2;
                bwd[q2] = p2;
                queue.push_back(p2);
            } else if (fwd[p2] != q2 || bwd[q2] != p2) {
                return false;
            }
        }
    }
    return queue.size() == d1.size();
}

}  // namespace wheeler
