#include "wheeler/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wheeler/error.hpp"

namespace wheeler::oracles {

namespace {

using StateSet = std::set<State>;

StateSet step(const StateLabeledNfa& a, const StateSet& from, Symbol s) {
    StateSet out;
    for (State q : from)
        for (State r : a.successors(q))
            if (a.label(r) == s) out.insert(r);
    return out;
}

// (word, states reached) for every readable word up to max_len.
std::vector<std::pair<Word, StateSet>> walk(const StateLabeledNfa& a, std::size_t max_len) {
    std::vector<std::pair<Word, StateSet>> out{{{}, {0}}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].first.size() == max_len) continue;
        for (Symbol s = 0; s < static_cast<Symbol>(a.alphabet().size()); ++s) {
            auto next = step(a, out[i].second, s);
            if (next.empty()) continue;
            Word w = out[i].first;
            w.push_back(s);
            out.emplace_back(std::move(w), std::move(next));
        }
    }
    return out;
}

std::vector<std::pair<Word, State>> walk(const EdgeLabeledDfa& d, State from, std::size_t max_len) {
    std::vector<std::pair<Word, State>> out{{{}, from}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].first.size() == max_len) continue;
        for (Symbol s = 0; s < static_cast<Symbol>(d.alphabet().size()); ++s) {
            const State r = d.next(out[i].second, s);
            if (r == kNoState) continue;
            Word w = out[i].first;
            w.push_back(s);
            out.emplace_back(std::move(w), r);
        }
    }
    return out;
}

std::vector<Word> colex_sorted(std::vector<Word> words) {
    std::sort(words.begin(), words.end(), ColexLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

}  // namespace

std::vector<Word> enumerate_prefixes(const StateLabeledNfa& a, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, qs] : walk(a, max_len)) out.push_back(w);
    return colex_sorted(std::move(out));
}

std::vector<Word> enumerate_prefixes(const EdgeLabeledDfa& d, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, q] : walk(d, 0, max_len)) out.push_back(w);
    return colex_sorted(std::move(out));
}

std::vector<Word> enumerate_language(const StateLabeledNfa& a, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, qs] : walk(a, max_len))
        if (std::any_of(qs.begin(), qs.end(), [&](State q) { return a.is_final(q); })) out.push_back(w);
    return colex_sorted(std::move(out));
}

std::vector<Word> enumerate_language(const EdgeLabeledDfa& d, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, q] : walk(d, 0, max_len))
        if (d.is_final(q)) out.push_back(w);
    return colex_sorted(std::move(out));
}

std::vector<Word> incoming_words(const StateLabeledNfa& a, State q, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, qs] : walk(a, max_len))
        if (qs.count(q)) out.push_back(w);
    return colex_sorted(std::move(out));
}

std::vector<Word> right_context(const EdgeLabeledDfa& d, State q, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& [w, r] : walk(d, q, max_len))
        if (d.is_final(r)) out.push_back(w);
    return colex_sorted(std::move(out));
}

namespace {

bool axioms_hold(const StateLabeledNfa& a, const std::vector<std::size_t>& pos) {
    for (State q = 0; q < a.size(); ++q)
        if (!a.predecessors(q).empty() && q == 0) return false;
    for (const Edge& e1 : a.edges())
        for (const Edge& e2 : a.edges()) {
            const Symbol l1 = a.label(e1.to), l2 = a.label(e2.to);
            if (l1 < l2 && !(pos[e1.to] < pos[e2.to])) return false;
            if (l1 == l2 && pos[e1.from] < pos[e2.from] && !(pos[e1.to] <= pos[e2.to])) return false;
        }
    return true;
}

}  // namespace

std::vector<WheelerOrder> exhaustive_wheeler_order(const StateLabeledNfa& a, std::size_t max_states) {
    const std::size_t n = a.size();
    if (n > max_states)
        throw UsageError("exhaustive_wheeler_order: " + std::to_string(n) + " states, limit " +
                         std::to_string(max_states));
    std::map<Symbol, std::vector<State>> blocks;
    for (State q = 1; q < n; ++q) blocks[a.label(q)].push_back(q);
    std::vector<std::vector<State>> parts;
    for (auto& [l, qs] : blocks) parts.push_back(qs);

    std::vector<WheelerOrder> out;
    // odometer over the permutations of every block
    while (true) {
        std::vector<State> perm{0};
        for (const auto& p : parts) perm.insert(perm.end(), p.begin(), p.end());
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
        if (axioms_hold(a, pos)) out.emplace_back(perm);
        std::size_t b = 0;
        while (b < parts.size() && !std::next_permutation(parts[b].begin(), parts[b].end())) ++b;
        if (b == parts.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const WheelerOrder& x, const WheelerOrder& y) { return x.perm() < y.perm(); });
    return out;
}

namespace {

struct CycleSearch {
    const EdgeLabeledDfa& d;
    State u, v;
    std::size_t len;
    Word gamma;
    std::vector<Word> found;

    void run(State x, State y) {
        if (gamma.size() == len) {
            if (x == u && y == v) found.push_back(gamma);
            return;
        }
        for (Symbol s = 0; s < static_cast<Symbol>(d.alphabet().size()); ++s) {
            const State x2 = d.next(x, s), y2 = d.next(y, s);
            if (x2 == kNoState || y2 == kNoState) continue;
            gamma.push_back(s);
            run(x2, y2);
            gamma.pop_back();
        }
    }
};

}  // namespace

std::optional<NotWheelerWitness> bounded_witness_search(const EdgeLabeledDfa& d, std::size_t len_cap) {
    const std::size_t n = d.size();
    const auto paths = len_cap == 0 ? std::vector<std::pair<Word, State>>{} : walk(d, 0, len_cap - 1);
    for (std::size_t g = 1; g <= len_cap; ++g) {
        for (State u = 0; u < n; ++u)
            for (State v = u + 1; v < n; ++v) {
                std::vector<Word> mus, nus;
                for (const auto& [w, q] : paths)
                    if (w.size() < g) {
                        if (q == u) mus.push_back(w);
                        if (q == v) nus.push_back(w);
                    }
                if (mus.empty() || nus.empty()) continue;
                CycleSearch cs{d, u, v, g, {}, {}};
                cs.run(u, v);
                for (const Word& gamma : cs.found) {
                    for (const Word& mu : mus)
                        for (const Word& nu : nus) {
                            const bool below = colex_less(mu, gamma) && colex_less(nu, gamma);
                            const bool above = colex_less(gamma, mu) && colex_less(gamma, nu);
                            if (below || above) return NotWheelerWitness{u, v, mu, nu, gamma};
                        }
                }
            }
    }
    return std::nullopt;
}

EdgeLabeledDfa subset_construct(const StateLabeledNfa& a, std::size_t max_subsets) {
    std::map<StateSet, State> id{{{0}, 0}};
    std::vector<StateSet> sets{{0}};
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (Symbol s = 0; s < static_cast<Symbol>(a.alphabet().size()); ++s) {
            auto next = step(a, sets[i], s);
            if (next.empty()) continue;
            auto it = id.find(next);
            if (it == id.end()) {
                if (sets.size() == max_subsets)
                    throw BudgetExceeded("subset_construct", sets.size() + 1, max_subsets);
                it = id.emplace(next, static_cast<State>(sets.size())).first;
                sets.push_back(next);
            }
            edges.push_back({static_cast<State>(i), s, it->second});
        }
    std::vector<State> finals;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (std::any_of(sets[i].begin(), sets[i].end(), [&](State q) { return a.is_final(q); }))
            finals.push_back(static_cast<State>(i));
    return EdgeLabeledDfa(a.alphabet(), sets.size(), edges, finals);
}

bool unary_finite_or_cofinite(const EdgeLabeledDfa& d) {
    if (d.alphabet().size() != 1) throw UsageError("unary_finite_or_cofinite: alphabet must have one symbol");
    std::vector<std::size_t> seen(d.size(), SIZE_MAX);
    std::vector<State> trail;
    State q = 0;
    while (q != kNoState && seen[q] == SIZE_MAX) {
        seen[q] = trail.size();
        trail.push_back(q);
        q = d.next(q, 0);
    }
    if (q == kNoState) return true;  // a finite chain
    bool any_final = false, all_final = true;
    for (std::size_t i = seen[q]; i < trail.size(); ++i) {
        any_final = any_final || d.is_final(trail[i]);
        all_final = all_final && d.is_final(trail[i]);
    }
    return !any_final || all_final;
}

}  // namespace wheeler::oracles
