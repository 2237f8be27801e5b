#include "wheeler/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "wheeler/dfa_ops.hpp"
#include "wheeler/error.hpp"
#include "wheeler/regular.hpp"

namespace wheeler {

namespace {

// Adds a trie of `words` hanging off `root`; the word ends become finals.
void add_trie(EdgeNfa& a, State root, const std::vector<Word>& words) {
    std::map<std::pair<State, Symbol>, State> child;
    for (const Word& w : words) {
        State q = root;
        for (Symbol s : w) {
            if (!a.alphabet.contains(s)) throw UsageError("word uses a symbol outside the alphabet");
            auto it = child.find({q, s});
            if (it == child.end()) {
                const State r = a.add_state();
                a.add_edge(q, s, r);
                it = child.emplace(std::pair{q, s}, r).first;
            }
            q = it->second;
        }
        a.finals.push_back(q);
    }
}

// Σ*·S (plus = false) or Σ⁺·S (plus = true).
EdgeNfa suffix_language(const Alphabet& alphabet, const std::vector<Word>& tails, bool plus) {
    EdgeNfa a{alphabet, 0, {}, {}, {}};
    const State start = a.add_state();
    a.initials = {start};
    State loop = start;
    if (plus) {
        loop = a.add_state();
        for (Symbol s = 0; s < static_cast<Symbol>(alphabet.size()); ++s) a.add_edge(start, s, loop);
    }
    for (Symbol s = 0; s < static_cast<Symbol>(alphabet.size()); ++s) a.add_edge(loop, s, loop);
    add_trie(a, loop, tails);
    return a;
}

// All words of length 0..max_len, in length-then-lex order.
std::vector<Word> short_words(std::size_t k, std::size_t max_len) {
    std::size_t total = 0, layer = 1;
    for (std::size_t l = 0; l <= max_len; ++l) {
        total += layer;
        if (total > 1'000'000) throw UsageError("gen_interval: endpoints too long for the alphabet");
        layer *= k;
    }
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (Symbol s = 0; s < static_cast<Symbol>(k); ++s) {
            Word w = out[i];
            w.push_back(s);
            out.push_back(std::move(w));
        }
    }
    return out;
}

EdgeLabeledDfa left_ray(const Alphabet& alphabet, const Word& hi) {
    std::vector<Word> f, low;
    for (auto& w : short_words(alphabet.size(), hi.size())) {
        if (!colex_less(w, hi)) continue;
        if (w.size() == hi.size()) f.push_back(w);
        low.push_back(std::move(w));
    }
    EdgeNfa a = suffix_language(alphabet, f, true);
    const State r = a.add_state();
    a.initials.push_back(r);
    add_trie(a, r, low);
    return minimize_dfa(determinize_nfa(a));
}

EdgeLabeledDfa right_ray(const Alphabet& alphabet, const Word& lo) {
    std::vector<Word> high;
    for (auto& w : short_words(alphabet.size(), lo.size()))
        if (colex_less(lo, w)) high.push_back(std::move(w));
    // Σ*·{β ≻ α₀ : |β| ≤ |α₀|} misses the words with α₀ as a proper suffix
    EdgeNfa a = suffix_language(alphabet, high, false);
    EdgeNfa b = suffix_language(alphabet, {lo}, true);
    const auto offset = static_cast<State>(a.states);
    a.states += b.states;
    for (auto e : b.edges) a.add_edge(e.from + offset, e.symbol, e.to + offset);
    for (State q : b.initials) a.initials.push_back(q + offset);
    for (State q : b.finals) a.finals.push_back(q + offset);
    return minimize_dfa(determinize_nfa(a));
}

}  // namespace

EdgeLabeledDfa finite_dfa(const Alphabet& alphabet, const std::vector<Word>& words) {
    EdgeNfa a{alphabet, 0, {}, {}, {}};
    a.initials = {a.add_state()};
    add_trie(a, 0, words);
    return minimize_dfa(determinize_nfa(a));
}

OrderedNfa gen_path_automaton(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) throw UsageError("gen_path_automaton: word must be nonempty");
    for (Symbol s : w)
        if (!alphabet.contains(s)) throw UsageError("gen_path_automaton: symbol outside the alphabet");
    const std::size_t n = w.size() + 1;
    // state i is reached by the prefix of length i
    std::vector<Symbol> labels{kHash};
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        labels.push_back(w[i - 1]);
        edges.push_back({static_cast<State>(i - 1), static_cast<State>(i)});
    }
    std::vector<State> perm(n);
    for (State q = 0; q < n; ++q) perm[q] = q;
    std::sort(perm.begin(), perm.end(), [&](State a, State b) {
        return colex_less(Word(w.begin(), w.begin() + a), Word(w.begin(), w.begin() + b));
    });
    StateLabeledNfa a(alphabet, std::move(labels), std::move(edges), {static_cast<State>(n - 1)});
    return {std::move(a), WheelerOrder(std::move(perm))};
}

const char* to_string(IntervalKind k) noexcept {
    switch (k) {
        case IntervalKind::Open: return "open";
        case IntervalKind::ClosedLeft: return "closed-left";
        case IntervalKind::ClosedRight: return "closed-right";
        case IntervalKind::Closed: return "closed";
        case IntervalKind::LeftRay: return "left-ray";
        case IntervalKind::RightRay: return "right-ray";
    }
    return "?";
}

EdgeLabeledDfa gen_interval(const IntervalSpec& spec, const Alphabet& alphabet) {
    const bool need_lo = spec.kind != IntervalKind::LeftRay;
    const bool need_hi = spec.kind != IntervalKind::RightRay;
    if ((need_lo && spec.lo.empty()) || (need_hi && spec.hi.empty()))
        throw UsageError("gen_interval: endpoints must be nonempty words");
    for (const Word* w : {&spec.lo, &spec.hi})
        for (Symbol s : *w)
            if (!alphabet.contains(s)) throw UsageError("gen_interval: symbol outside the alphabet");
    if (need_lo && need_hi && colex_less(spec.hi, spec.lo)) throw UsageError("gen_interval: lower endpoint above upper");

    if (spec.kind == IntervalKind::LeftRay) return left_ray(alphabet, spec.hi);
    if (spec.kind == IntervalKind::RightRay) return right_ray(alphabet, spec.lo);
    EdgeLabeledDfa d = minimize_dfa(
        product_dfa(right_ray(alphabet, spec.lo), left_ray(alphabet, spec.hi), ProductMode::Intersect));
    // a half-open interval with equal endpoints is empty
    const bool proper = colex_less(spec.lo, spec.hi) || spec.kind == IntervalKind::Closed;
    std::vector<Word> ends;
    if (proper && (spec.kind == IntervalKind::ClosedLeft || spec.kind == IntervalKind::Closed)) ends.push_back(spec.lo);
    if (proper && (spec.kind == IntervalKind::ClosedRight || spec.kind == IntervalKind::Closed)) ends.push_back(spec.hi);
    return ends.empty() ? d : union_finite(d, ends);
}

LmFamily gen_Lm(std::size_t m) {
    if (m < 1 || m > 4) throw UsageError("gen_Lm: m must be between 1 and 4");
    const Alphabet sigma = Alphabet::from_string("abcdef");
    constexpr Symbol a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

    // DFA: 0, then per branch a head state and an a-state and b-state per level, then two sinks.
    std::vector<LabeledEdge> edges;
    State next = 1;
    std::vector<State> finals;
    for (auto [head_sym, tail_sym] : {std::pair{c, e}, std::pair{d, f}}) {
        const State head = next++;
        edges.push_back({0, head_sym, head});
        std::vector<State> prev{head};
        for (std::size_t level = 0; level < m; ++level) {
            const State sa = next++, sb = next++;
            for (State p : prev) {
                edges.push_back({p, a, sa});
                edges.push_back({p, b, sb});
            }
            prev = {sa, sb};
        }
        const State sink = next++;
        for (State p : prev) edges.push_back({p, tail_sym, sink});
        finals.push_back(sink);
    }
    EdgeLabeledDfa dfa(sigma, next, edges, finals);

    // WDFA: the unraveling, one state per proper prefix plus the two sinks.
    struct Node {
        Word access;
        Symbol label;
    };
    std::vector<Node> nodes{{{}, kHash}};
    std::vector<Edge> wedges;
    std::vector<State> wfinals;
    for (auto [head_sym, tail_sym] : {std::pair{c, e}, std::pair{d, f}}) {
        nodes.push_back({{head_sym}, head_sym});
        wedges.push_back({0, static_cast<State>(nodes.size() - 1)});
        std::vector<State> layer{static_cast<State>(nodes.size() - 1)};
        for (std::size_t level = 0; level < m; ++level) {
            std::vector<State> next_layer;
            for (State p : layer)
                for (Symbol s : {a, b}) {
                    Word w = nodes[p].access;
                    w.push_back(s);
                    nodes.push_back({std::move(w), s});
                    wedges.push_back({p, static_cast<State>(nodes.size() - 1)});
                    next_layer.push_back(static_cast<State>(nodes.size() - 1));
                }
            layer = std::move(next_layer);
        }
        Word w = nodes[layer.front()].access;
        w.push_back(tail_sym);
        nodes.push_back({std::move(w), tail_sym});
        const auto sink = static_cast<State>(nodes.size() - 1);
        for (State p : layer) wedges.push_back({p, sink});
        wfinals.push_back(sink);
    }
    std::vector<State> perm(nodes.size());
    for (State q = 0; q < nodes.size(); ++q) perm[q] = q;
    std::sort(perm.begin(), perm.end(), [&](State x, State y) { return colex_less(nodes[x].access, nodes[y].access); });
    std::vector<Symbol> labels;
    for (const auto& nd : nodes) labels.push_back(nd.label);
    StateLabeledNfa w(sigma, std::move(labels), std::move(wedges), std::move(wfinals));
    return {std::move(dfa), {std::move(w), WheelerOrder(std::move(perm))}};
}

EdgeLabeledDfa concat_finite(const EdgeLabeledDfa& d, const std::vector<Word>& words) {
    EdgeNfa a = EdgeNfa::from_dfa(d);
    const auto finals = a.finals;
    a.finals.clear();
    const State root = a.add_state();
    for (State q : finals) a.add_edge(q, kEpsilon, root);
    add_trie(a, root, words);
    return minimize_dfa(determinize_nfa(a));
}

EdgeLabeledDfa union_finite(const EdgeLabeledDfa& d, const std::vector<Word>& words) {
    return minimize_dfa(product_dfa(d, finite_dfa(d.alphabet(), words), ProductMode::Union));
}

OrderedNfa pref_closure(const OrderedNfa& w) {
    std::vector<State> all(w.automaton.size());
    for (State q = 0; q < all.size(); ++q) all[q] = q;
    return {w.automaton.with_finals(std::move(all)), w.order};
}

OrderedNfa pref_minus(const OrderedNfa& w) {
    std::vector<State> flipped;
    for (State q = 0; q < w.automaton.size(); ++q)
        if (!w.automaton.is_final(q)) flipped.push_back(q);
    return {w.automaton.with_finals(std::move(flipped)), w.order};
}

bool is_primitive(const Word& w) {
    if (w.empty()) throw UsageError("is_primitive: empty word");
    Word ww = w;
    ww.insert(ww.end(), w.begin(), w.end());
    // w is a proper power iff it occurs in ww strictly between positions 0 and |w|
    auto it = std::search(ww.begin() + 1, ww.end(), w.begin(), w.end());
    return static_cast<std::size_t>(it - ww.begin()) == w.size();
}

EdgeLabeledDfa gen_star_family(const Alphabet& alphabet, const Word& a1, const Word& a, const Word& a2) {
    if (a.empty()) throw UsageError("gen_star_family: the starred word must be nonempty");
    EdgeNfa n{alphabet, 0, {}, {}, {}};
    auto chain = [&](State from, const Word& w) {
        for (Symbol s : w) {
            if (!alphabet.contains(s)) throw UsageError("gen_star_family: symbol outside the alphabet");
            const State to = n.add_state();
            n.add_edge(from, s, to);
            from = to;
        }
        return from;
    };
    const State start = n.add_state();
    n.initials = {start};
    const State hub = chain(start, a1);
    const State loop_end = chain(hub, a);
    n.add_edge(loop_end, kEpsilon, hub);
    n.finals = {chain(hub, a2)};
    return minimize_dfa(determinize_nfa(n));
}

EdgeLabeledDfa gen_unary(std::size_t tail, std::size_t cycle, const std::vector<State>& finals) {
    const std::size_t n = tail + cycle;
    if (n == 0) throw UsageError("gen_unary: need at least one state");
    std::vector<LabeledEdge> edges;
    for (State q = 0; q + 1 < n; ++q) edges.push_back({q, 0, q + 1});
    if (cycle > 0) edges.push_back({static_cast<State>(n - 1), 0, static_cast<State>(tail)});
    for (State f : finals)
        if (f >= n) throw UsageError("gen_unary: final state out of range");
    return trim(EdgeLabeledDfa(Alphabet::from_string("a"), n, edges, finals));
}

EdgeLabeledDfa concat(const EdgeLabeledDfa& d1, const EdgeLabeledDfa& d2) {
    if (!(d1.alphabet() == d2.alphabet())) throw UsageError("concat: alphabets differ");
    EdgeNfa a = EdgeNfa::from_dfa(d1);
    const auto first = a.finals;
    const State base = a.embed(d2);
    for (State q : first) a.add_edge(q, kEpsilon, base);
    a.finals.clear();
    for (State q : d2.finals()) a.finals.push_back(base + q);
    return minimize_dfa(determinize_nfa(a));
}

EdgeLabeledDfa suffix_closure(const EdgeLabeledDfa& d) {
    const EdgeLabeledDfa t = trim(d);
    EdgeNfa a = EdgeNfa::from_dfa(t);
    a.initials.clear();
    for (State q = 0; q < t.size(); ++q) a.initials.push_back(q);
    return minimize_dfa(determinize_nfa(a));
}

EdgeLabeledDfa factor_closure(const EdgeLabeledDfa& d) {
    const EdgeLabeledDfa t = trim(d);
    if (is_empty(t)) return t;
    EdgeNfa a = EdgeNfa::from_dfa(t);
    a.initials.clear();
    a.finals.clear();
    for (State q = 0; q < t.size(); ++q) {
        a.initials.push_back(q);
        a.finals.push_back(q);
    }
    return minimize_dfa(determinize_nfa(a));
}

EdgeLabeledDfa random_dfa(const Alphabet& alphabet, std::size_t states, std::uint64_t seed, double density) {
    if (states == 0) throw UsageError("random_dfa: need at least one state");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution present(density), final(0.3);
    std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
    std::vector<LabeledEdge> edges;
    std::vector<State> finals;
    for (State q = 0; q < states; ++q) {
        for (Symbol s = 0; s < static_cast<Symbol>(alphabet.size()); ++s)
            if (present(rng)) edges.push_back({q, s, target(rng)});
        if (final(rng) || q + 1 == states) finals.push_back(q);
    }
    return trim(EdgeLabeledDfa(alphabet, states, edges, finals));
}

OrderedNfa random_wnfa(const Alphabet& alphabet, std::size_t states, std::uint64_t seed, double density) {
    if (states < 2) throw UsageError("random_wnfa: need at least two states");
    std::mt19937_64 rng(seed);
    const auto k = static_cast<Symbol>(alphabet.size());
    // label blocks in rank order after state 0
    std::vector<Symbol> labels{kHash};
    std::uniform_int_distribution<Symbol> sym(0, k - 1);
    for (std::size_t i = 1; i < states; ++i) labels.push_back(sym(rng));
    std::sort(labels.begin() + 1, labels.end());
    std::bernoulli_distribution keep(density), final(0.3);
    std::uniform_int_distribution<int> move(0, 2);
    std::vector<Edge> edges;
    const auto n = static_cast<State>(states);
    for (Symbol c = 0; c < k; ++c) {
        State lo = 1;
        while (lo < n && labels[lo] != c) ++lo;
        if (lo == n) continue;
        State hi = lo;
        while (hi + 1 < n && labels[hi + 1] == c) ++hi;
        // a monotone staircase from (source 0, target lo) to (source n-1, target hi); edges on it
        // never cross, and every target gets at least one edge
        State s = 0, t = lo;
        std::uniform_int_distribution<State> start(0, n - 1);
        s = std::min<State>(start(rng), n - 1) / 2;
        bool fresh = true;
        while (true) {
            if (fresh || keep(rng)) edges.push_back({s, t});
            fresh = false;
            if (s + 1 == n && t == hi) break;
            const int mv = s + 1 == n ? 1 : t == hi ? 0 : move(rng);
            if (mv != 1) ++s;
            if (mv != 0 && t < hi) {
                ++t;
                fresh = true;
            }
        }
    }
    std::vector<State> finals;
    for (State q = 1; q < n; ++q)
        if (final(rng) || q + 1 == n) finals.push_back(q);
    StateLabeledNfa a = trim(StateLabeledNfa(alphabet, std::move(labels), std::move(edges), std::move(finals)));
    const auto size = a.size();
    return {std::move(a), WheelerOrder::identity(size)};
}

}  // namespace wheeler
