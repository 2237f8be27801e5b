// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "wheeler/constructions.hpp"
#include "wheeler/determinize.hpp"
#include "wheeler/dfa_ops.hpp"
#include "wheeler/forward.hpp"
#include "wheeler/language_decision.hpp"
#include "wheeler/minimal_wdfa.hpp"
#include "wheeler/oracles.hpp"

using namespace wheeler;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

State run(const EdgeLabeledDfa& d, State q, const Word& w) {
    for (Symbol s : w) {
        if (q == kNoState) return q;
        q = d.next(q, s);
    }
    return q;
}

bool witness_holds(const EdgeLabeledDfa& m, const NotWheelerWitness& w) {
    if (w.u == w.v || w.gamma.empty()) return false;
    if (run(m, 0, w.mu) != w.u || run(m, 0, w.nu) != w.v) return false;
    if (run(m, w.u, w.gamma) != w.u || run(m, w.v, w.gamma) != w.v) return false;
    if (w.mu.size() >= w.gamma.size() || w.nu.size() >= w.gamma.size()) return false;
    const bool below = colex_less(w.mu, w.gamma) && colex_less(w.nu, w.gamma);
    const bool above = colex_less(w.gamma, w.mu) && colex_less(w.gamma, w.nu);
    return below || above;
}

bool is_wheeler(const EdgeLabeledDfa& d) { return decide_wheeler(d).wheeler; }

// Random state renumbering (0 stays put); the order follows the states.
OrderedNfa shuffle(const OrderedNfa& w, std::mt19937_64& rng) {
    const std::size_t n = w.automaton.size();
    std::vector<State> to(n);
    for (State q = 0; q < n; ++q) to[q] = q;
    std::shuffle(to.begin() + 1, to.end(), rng);
    std::vector<Symbol> labels(n);
    for (State q = 0; q < n; ++q) labels[to[q]] = w.automaton.label(q);
    std::vector<Edge> edges;
    for (const auto& e : w.automaton.edges()) edges.push_back({to[e.from], to[e.to]});
    std::vector<State> finals;
    for (State q : w.automaton.finals()) finals.push_back(to[q]);
    std::vector<State> perm;
    for (State q : w.order.perm()) perm.push_back(to[q]);
    return {StateLabeledNfa(w.automaton.alphabet(), labels, edges, finals), WheelerOrder(perm)};
}

bool brute_reduced(const StateLabeledNfa& a, std::size_t max_len) {
    std::vector<std::vector<Word>> in;
    for (State q = 0; q < a.size(); ++q) in.push_back(oracles::incoming_words(a, q, max_len));
    std::sort(in.begin(), in.end());
    return std::adjacent_find(in.begin(), in.end()) == in.end();
}

std::string show(const Alphabet& s, const Word& w) { return fx::show(s, w); }

// 1
Outcome reference_positive() {
    Outcome o;
    const auto e = fx::exw();
    o.require(check_wheeler(e.automaton, e.order).empty(), "exw order rejected");
    o.require(is_wheeler(minimize_dfa(fx::exw_dfa())), "exw language rejected");
    const Alphabet abn = Alphabet::from_string("abn");
    const auto b = gen_path_automaton(abn, fx::word(abn, "banana"));
    std::string labels;
    for (State q : b.order.perm()) labels += abn.symbol(b.automaton.label(q));
    o.require(labels == "#aaabnn", "banana order labels " + labels);
    o.require(check_wheeler(b.automaton, b.order).empty(), "banana order rejected");
    o.detail = o.pass ? "exw order and language Wheeler; banana order #aaabnn valid" : o.detail;
    return o;
}

// 2
Outcome reference_negative() {
    Outcome o;
    const auto exw = fx::exw_dfa();
    const std::vector<std::pair<std::string, EdgeLabeledDfa>> cases{
        {"ax*b|cx*d", fx::re("abcdx", "ax*b|cx*d")},
        {"a(aa)*", fx::re("a", "a(aa)*")},
        {"complement of b*", complement(fx::re("ab", "b*"))},
        {"b*a.b+a", concat(fx::re("ab", "b*a"), fx::re("ab", "b+a"))},
        {"Fact(ax*b|zx*d)", factor_closure(exw)},
        {"Suff(ax*b|zx*d)", suffix_closure(exw)},
        {"ax*a|bx*b|b", fx::re("abx", "ax*a|bx*b|b")},
    };
    std::string seen;
    for (const auto& [name, d] : cases) {
        const auto v = decide_wheeler(d);
        const auto m = minimize_dfa(d);
        o.require(!v.wheeler && v.witness, name + " reported Wheeler");
        if (!v.witness) continue;
        o.require(witness_holds(m, *v.witness), name + " witness fails the independent check");
        o.require(check_witness(m, *v.witness, search_bound(m.size())), name + " witness fails check_witness");
        seen += (seen.empty() ? "" : ", ") + name + " gamma=" + show(d.alphabet(), v.witness->gamma);
    }
    if (o.pass) o.detail = "7/7 NotWheeler: " + seen;
    return o;
}

// 3
Outcome incompleteness() {
    Outcome o;
    const auto bpa = fx::re("ab", "b+a");
    o.require(is_wheeler(bpa), "b+a rejected");
    const auto complete = complete_with_sink(bpa);
    const auto sl = edge_to_state_labeled(complete, false);
    const auto orders = oracles::exhaustive_wheeler_order(sl);
    o.require(orders.empty(), std::to_string(orders.size()) + " orders on the completed automaton");
    if (o.pass)
        o.detail = "b+a Wheeler; completed DFA " + std::to_string(complete.size()) + " states, state-labeled " +
                   std::to_string(sl.size()) + " states, 0 Wheeler orders";
    return o;
}

// 4
Outcome determinization_bound_holds() {
    Outcome o;
    std::mt19937_64 rng(4);
    std::size_t done = 0, violations = 0, biggest = 0;
    for (std::uint64_t seed = 0; done < 500; ++seed) {
        const Alphabet sigma = Alphabet::from_string(std::string("abc").substr(0, 1 + seed % 3));
        const auto base = random_wnfa(sigma, 2 + seed % 9, seed);
        if (!fx::covers_alphabet(base.automaton) || base.automaton.size() > 10) continue;
        const auto w = shuffle(base, rng);
        if (!check_wheeler(w.automaton, w.order).empty()) {
            ++violations;
            continue;
        }
        ++done;
        const auto d = wheeler_determinize(w.automaton, w.order);
        const auto n = w.automaton.size();
        biggest = std::max(biggest, n);
        const bool ok = d.automaton.size() <= determinization_bound(n, sigma.size()) &&
                        language_equiv(state_to_edge_labeled(d.automaton), oracles::subset_construct(w.automaton)) &&
                        check_wheeler(d.automaton, d.order).empty();
        violations += !ok;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.detail = std::to_string(done) + " WNFAs (n <= " + std::to_string(biggest) + "), " + std::to_string(violations) +
               " violations";
    return o;
}

// 5
Outcome blow_up() {
    Outcome o;
    std::string sizes;
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto lm = gen_Lm(m);
        const std::size_t n = lm.dfa.size(), w = lm.wdfa.automaton.size();
        sizes += (m > 1 ? ", " : "") + std::to_string(n) + "/" + std::to_string(w);
        o.require(n == 4 * m + 5 && w == 1 + (std::size_t{1} << (m + 2)), "sizes for m=" + std::to_string(m));
        const auto fixed = minimize_wdfa(lm.wdfa.automaton, lm.wdfa.order);
        o.require(order_isomorphic(fixed.automaton, fixed.order, lm.wdfa.automaton, lm.wdfa.order),
                  "minimize_wdfa moved L_" + std::to_string(m));
        if (m <= 2) {
            const auto from = min_wdfa_from_dfa(lm.dfa);
            o.require(order_isomorphic(from.automaton, from.order, lm.wdfa.automaton, lm.wdfa.order),
                      "min_wdfa_from_dfa differs for m=" + std::to_string(m));
        }
    }
    if (o.pass) o.detail = "DFA/WDFA sizes " + sizes + "; fixed points; reconstruction for m <= 2";
    return o;
}

// 6
Outcome forward() {
    Outcome o;
    const auto g = fx::fig_non_wheeler();
    const auto q = quotient_sorted(g);
    std::vector<std::vector<State>> merged;
    for (const auto& b : forward_stable_partition(g).blocks)
        if (b.size() > 1) merged.push_back(b);
    o.require(merged == std::vector<std::vector<State>>{{1, 2}}, "non-Wheeler figure: wrong merge");
    o.require(check_wheeler(q.quotient, q.order).empty(), "non-Wheeler figure: quotient order rejected");
    const auto p = forward_stable_partition(fx::fig_out_neq_a());
    o.require(p.size() == 4, "refinement figure: " + std::to_string(p.size()) + " blocks");

    std::vector<StateLabeledNfa> pool{fx::exw().automaton, g, fx::fig_out_neq_a(), fx::det_example().automaton};
    const Alphabet abn = Alphabet::from_string("abn");
    for (const char* w : {"banana", "aba", "nab"}) pool.push_back(gen_path_automaton(abn, fx::word(abn, w)).automaton);
    std::mt19937_64 rng(6);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Alphabet sigma = Alphabet::from_string(seed % 2 ? "ab" : "abc");
        const auto w = random_wnfa(sigma, 3 + seed % 6, seed, 0.5);
        pool.push_back(shuffle(w, rng).automaton);
    }
    std::size_t checked = 0, orders_seen = 0;
    for (const auto& a : pool) {
        if (a.size() > 8) continue;
        const auto idx = forward_stable_partition(a).block_index(a.size());
        const auto orders = oracles::exhaustive_wheeler_order(a);
        checked += !orders.empty();
        orders_seen += orders.size();
        for (const auto& ord : orders)
            for (State u = 0; u < a.size(); ++u)
                for (State v = 0; v < a.size(); ++v)
                    if (idx[u] < idx[v] && !(ord.pos(u) < ord.pos(v))) o.require(false, "agreement fails");
    }
    if (o.pass)
        o.detail = "merge {1,2}, quotient Wheeler; 4 singletons; agreement on " + std::to_string(checked) +
                   " automata, " + std::to_string(orders_seen) + " orders";
    return o;
}

// 7
Outcome cross_oracle() {
    Outcome o;
    std::size_t done = 0, negative = 0, beyond_cap = 0, disagree = 0;
    for (std::uint64_t seed = 0; done < 500; ++seed) {
        const Alphabet sigma = Alphabet::from_string(std::string("abc").substr(0, 1 + seed % 3));
        const auto d = minimize_dfa(random_dfa(sigma, 1 + seed % 6, seed));
        if (d.size() > 5 || is_empty(d)) continue;
        ++done;
        const std::size_t cap = sigma.size() == 3 ? 8 : 10;
        const auto v = decide_wheeler(d);
        const auto w = oracles::bounded_witness_search(d, cap);
        if (!v.wheeler) {
            ++negative;
            if (!v.witness || !witness_holds(d, *v.witness)) ++disagree;
            else if (v.witness->gamma.size() > cap) ++beyond_cap;
            else if (!w) ++disagree;
        }
        if (w && (v.wheeler || !witness_holds(d, *w))) ++disagree;
    }
    o.require(disagree == 0, std::to_string(disagree) + " disagreements");

    std::mt19937_64 rng(7);
    std::size_t unary_bad = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t tail = rng() % 4, cycle = rng() % 4 + (tail == 0);
        std::vector<State> finals;
        for (State q = 0; q < tail + cycle; ++q)
            if (rng() % 2) finals.push_back(q);
        if (finals.empty()) finals.push_back(static_cast<State>(tail + cycle - 1));
        const auto d = gen_unary(tail, cycle, finals);
        unary_bad += is_wheeler(d) != oracles::unary_finite_or_cofinite(d);
    }
    o.require(unary_bad == 0, std::to_string(unary_bad) + " unary mismatches");
    o.detail = std::to_string(done) + " DFAs (" + std::to_string(negative) + " NotWheeler, " +
               std::to_string(beyond_cap) + " with gamma beyond the cap), " + std::to_string(disagree) +
               " disagreements; 200 unary, " + std::to_string(unary_bad) + " mismatches";
    return o;
}

// 8
Outcome closure() {
    Outcome o;
    const Alphabet ab = Alphabet::from_string("ab");
    std::vector<EdgeLabeledDfa> pool;
    for (std::uint64_t seed = 0; pool.size() < 40; ++seed) {
        const auto d = minimize_dfa(random_dfa(ab, 3 + seed % 4, seed));
        if (!is_empty(d) && is_wheeler(d)) pool.push_back(d);
    }
    std::mt19937_64 rng(8);
    const auto short_words = fx::all_words(ab, 3);
    auto finite_set = [&] {
        std::vector<Word> f;
        for (std::size_t k = 1 + rng() % 4; k > 0; --k) f.push_back(short_words[rng() % short_words.size()]);
        return f;
    };
    std::size_t inter = 0, uni = 0, cat = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& x = pool[rng() % pool.size()];
        const auto& y = pool[rng() % pool.size()];
        inter += is_wheeler(product_dfa(x, y, ProductMode::Intersect));
        uni += is_wheeler(union_finite(x, finite_set()));
        cat += is_wheeler(concat_finite(x, finite_set()));
    }
    o.require(inter == 100 && uni == 100 && cat == 100, "closure counts");
    std::size_t star = 0, words = 0;
    for (const Word& a : fx::all_words(ab, 5)) {
        if (a.empty()) continue;
        ++words;
        star += is_wheeler(gen_star_family(ab, {}, a, {})) == is_primitive(a);
    }
    o.require(words == 62 && star == words, "star family " + std::to_string(star) + "/" + std::to_string(words));
    o.detail = "intersection " + std::to_string(inter) + "/100, union_finite " + std::to_string(uni) +
               "/100, concat_finite " + std::to_string(cat) + "/100, star family " + std::to_string(star) + "/" +
               std::to_string(words);
    return o;
}

bool in_interval(const IntervalSpec& s, const Word& w) {
    switch (s.kind) {
        case IntervalKind::Open: return colex_less(s.lo, w) && colex_less(w, s.hi);
        case IntervalKind::ClosedLeft: return !colex_less(w, s.lo) && colex_less(w, s.hi);
        case IntervalKind::ClosedRight: return colex_less(s.lo, w) && !colex_less(s.hi, w);
        case IntervalKind::Closed: return !colex_less(w, s.lo) && !colex_less(s.hi, w);
        case IntervalKind::LeftRay: return colex_less(w, s.hi);
        case IntervalKind::RightRay: return colex_less(s.lo, w);
    }
    return false;
}

// 9
Outcome intervals() {
    Outcome o;
    const Alphabet ab = Alphabet::from_string("ab");
    const auto endpoints = fx::all_words(ab, 3);
    const auto probe = fx::all_words(ab, 5);
    std::mt19937_64 rng(9);
    std::size_t member_bad = 0, wheeler = 0;
    for (int i = 0; i < 50; ++i) {
        Word x = endpoints[1 + rng() % (endpoints.size() - 1)], y = endpoints[1 + rng() % (endpoints.size() - 1)];
        if (colex_less(y, x)) std::swap(x, y);
        const IntervalSpec s{static_cast<IntervalKind>(rng() % 6), x, y};
        const auto d = gen_interval(s, ab);
        for (const Word& w : probe) member_bad += accepts(d, w) != in_interval(s, w);
        wheeler += is_wheeler(d);
    }
    o.require(member_bad == 0, std::to_string(member_bad) + " membership mismatches");
    o.require(wheeler == 50, std::to_string(wheeler) + "/50 Wheeler");
    o.detail = "50 intervals, " + std::to_string(probe.size()) + " probe words each, " + std::to_string(member_bad) +
               " mismatches, " + std::to_string(wheeler) + "/50 Wheeler";
    return o;
}

// 10
Outcome uniqueness() {
    Outcome o;
    std::vector<StateLabeledNfa> pool{fx::exw().automaton, fx::det_example().automaton};
    const Alphabet abn = Alphabet::from_string("abn");
    for (const char* w : {"banana", "aba", "nab", "abba"}) pool.push_back(gen_path_automaton(abn, fx::word(abn, w)).automaton);
    for (const char* r : {"b+a", "b*a", "ab*", "(ab)*b", "a|bb|bab"}) pool.push_back(min_wdfa_from_dfa(fx::re("ab", r)).automaton);
    pool.push_back(gen_Lm(1).wdfa.automaton);
    std::mt19937_64 rng(10);
    for (std::uint64_t seed = 0; seed < 150; ++seed) pool.push_back(shuffle(random_wnfa(Alphabet::from_string("ab"), 3 + seed % 6, seed, 0.5), rng).automaton);

    std::size_t reduced = 0;
    for (const auto& a : pool) {
        if (a.size() > 8) continue;
        const auto orders = oracles::exhaustive_wheeler_order(a);
        if (orders.empty() || !is_reduced(a, orders.front())) continue;
        ++reduced;
        const auto r = recognize_sort_reduced(a);
        o.require(orders.size() == 1, "reduced fixture with " + std::to_string(orders.size()) + " orders");
        o.require(r.outcome == SortOutcome::Wheeler && r.order == orders.front(), "forward order differs");
    }

    std::size_t agree = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto w = random_wnfa(Alphabet::from_string(seed % 2 ? "ab" : "abc"), 3 + seed % 6, 1000 + seed, 0.5);
        agree += is_reduced(w.automaton, w.order) == brute_reduced(w.automaton, 8);
    }
    o.require(agree == 100, std::to_string(agree) + "/100 is_reduced agreement");
    o.detail = std::to_string(reduced) + " reduced fixtures with one order each; is_reduced agrees " +
               std::to_string(agree) + "/100";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"reference fixtures, positive", reference_positive},
        {"reference fixtures, negative", reference_negative},
        {"incompleteness fixture", incompleteness},
        {"determinization bound", determinization_bound_holds},
        {"blow-up law", blow_up},
        {"forward algorithm", forward},
        {"cross-oracle agreement", cross_oracle},
        {"closure suite", closure},
        {"interval suite", intervals},
        {"uniqueness and reducedness", uniqueness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu: %s (%s)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
