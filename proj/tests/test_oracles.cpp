#include "doctest.h"
#include "fixtures.hpp"
#include "wheeler/constructions.hpp"
#include "wheeler/determinize.hpp"
#include "wheeler/dfa_ops.hpp"
#include "wheeler/forward.hpp"
#include "wheeler/oracles.hpp"

using namespace wheeler;
using namespace wheeler::oracles;

TEST_CASE("enumerate_prefixes") {
    const Alphabet ab = Alphabet::from_string("ab");
    const auto p = gen_path_automaton(ab, fx::word(ab, "ab"));
    CHECK(enumerate_prefixes(p.automaton, 5) == fx::words(ab, {"", "a", "ab"}));
    CHECK(enumerate_prefixes(fx::re("ab", "b+a"), 2) == fx::words(ab, {"", "ba", "b", "bb"}));
    CHECK(enumerate_prefixes(fx::exw_dfa(), 0) == std::vector<Word>{Word{}});

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto w = enumerate_prefixes(random_dfa(ab, 4, seed), 7);
        for (std::size_t i = 1; i < w.size(); ++i) CHECK(colex_less(w[i - 1], w[i]));
    }
}

TEST_CASE("exhaustive_wheeler_order") {
    const auto e = fx::exw();
    CHECK(exhaustive_wheeler_order(e.automaton) == std::vector<WheelerOrder>{e.order});
    CHECK(exhaustive_wheeler_order(fx::fig_non_wheeler()).empty());
    const Alphabet abn = Alphabet::from_string("abn");
    CHECK(exhaustive_wheeler_order(gen_path_automaton(abn, fx::word(abn, "banana")).automaton).size() == 1);
    CHECK_THROWS_AS(exhaustive_wheeler_order(gen_Lm(1).wdfa.automaton, 8), UsageError);
}

TEST_CASE("reduced Wheeler automata have exactly the forward order") {
    const Alphabet ab = Alphabet::from_string("ab");
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const auto w = random_wnfa(ab, 3 + seed % 6, seed, 0.5);
        if (!is_reduced(w.automaton, w.order)) continue;
        const auto orders = exhaustive_wheeler_order(w.automaton);
        REQUIRE(orders.size() == 1);
        const auto r = recognize_sort_reduced(w.automaton);
        CHECK(r.outcome == SortOutcome::Wheeler);
        CHECK(r.order == orders.front());
    }
}

TEST_CASE("bounded_witness_search") {
    CHECK(bounded_witness_search(fx::re("abcdx", "ax*b|cx*d"), 4).has_value());
    CHECK(!bounded_witness_search(fx::exw_dfa(), 8));
    const auto odd = fx::re("a", "a(aa)*");
    const auto w = bounded_witness_search(odd, 4);
    REQUIRE(w);
    // the two parity states, shortest γ first; ε counts as a path label
    CHECK(w->u == 0);
    CHECK(w->v == 1);
    CHECK(w->gamma == Word{0, 0});
    CHECK(w->mu.empty());
    CHECK(w->nu == Word{0});
}

TEST_CASE("subset_construct") {
    const auto e = fx::exw();
    CHECK(isomorphic(subset_construct(e.automaton), state_to_edge_labeled(e.automaton)));

    const auto f = fx::fig_non_wheeler();
    const auto d = subset_construct(f);
    // {0} {1,2} {3} {3,4}; the empty set is not materialized
    CHECK(d.size() == 4);
    const auto q = quotient_sorted(f);
    CHECK(enumerate_language(d, 5) == enumerate_language(q.quotient, 5));

    const Alphabet ab = Alphabet::from_string("ab");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        // random NFA via the state-labeled view of a WNFA with extra crossing edges
        const auto w = random_wnfa(ab, 6, seed, 0.6);
        if (w.automaton.size() < 2) continue;
        auto edges = w.automaton.edges();
        edges.push_back({static_cast<State>(w.automaton.size() - 1), 1});
        const StateLabeledNfa a(ab, w.automaton.labels(), edges, w.automaton.finals());
        CHECK(fx::same_language(a, subset_construct(a), 7));
        if (fx::covers_alphabet(w.automaton)) {
            const auto det = wheeler_determinize(w.automaton, w.order);
            CHECK(language_equiv(subset_construct(w.automaton), state_to_edge_labeled(det.automaton)));
        }
    }
    CHECK_THROWS_AS(subset_construct(gen_Lm(3).wdfa.automaton, 3), BudgetExceeded);
}

TEST_CASE("unary_finite_or_cofinite") {
    CHECK(unary_finite_or_cofinite(gen_unary(3, 0, {2})));
    CHECK(unary_finite_or_cofinite(gen_unary(2, 2, {2, 3})));
    CHECK(!unary_finite_or_cofinite(gen_unary(1, 2, {2})));
    CHECK_THROWS_AS(unary_finite_or_cofinite(fx::exw_dfa()), UsageError);
}
