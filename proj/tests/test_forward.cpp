#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "wheeler/constructions.hpp"
#include "wheeler/dfa_ops.hpp"
#include "wheeler/forward.hpp"
#include "wheeler/oracles.hpp"

using namespace wheeler;

using Blocks = std::vector<std::vector<State>>;

TEST_CASE("forward_stable_partition on the figures") {
    const auto f = fx::fig_out_neq_a();
    const auto p = forward_stable_partition(f);
    CHECK(p.blocks == Blocks{{0}, {1}, {3}, {2}});
    CHECK(is_forward_stable(f, p));

    const auto g = fx::fig_non_wheeler();
    const auto q = forward_stable_partition(g);
    REQUIRE(q.size() == 4);
    CHECK(q.blocks[0] == std::vector<State>{0});
    CHECK(q.blocks[1] == std::vector<State>{1, 2});
    CHECK(q.blocks[2].size() == 1);
    CHECK(q.blocks[3].size() == 1);
    CHECK(is_forward_stable(g, q));
}

TEST_CASE("symmetric states stay together") {
    // # -> a1, a2 -> b ; a1 and a2 are indistinguishable
    StateLabeledNfa a(Alphabet::from_string("ab"), {kHash, 0, 0, 1}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3});
    const auto p = forward_stable_partition(a);
    CHECK(p.blocks == Blocks{{0}, {1, 2}, {3}});
}

TEST_CASE("quotient_sorted") {
    const auto q = quotient_sorted(fx::fig_non_wheeler());
    CHECK(q.quotient.size() == 4);
    CHECK(check_wheeler(q.quotient, q.order).empty());
    CHECK(q.class_map[1] == q.class_map[2]);
    CHECK(fx::same_language(q.quotient, oracles::subset_construct(fx::fig_non_wheeler()), 6));

    const auto e = fx::exw();
    const auto qe = quotient_sorted(e.automaton);
    CHECK(qe.quotient == e.automaton);
    CHECK(qe.order == e.order);

    const Alphabet a = Alphabet::from_string("a");
    const auto path = gen_path_automaton(a, fx::word(a, "aa"));
    const auto qp = quotient_sorted(path.automaton);
    CHECK(order_isomorphic(qp.quotient, qp.order, path.automaton, path.order));
}

TEST_CASE("recognize_sort_reduced") {
    const auto e = fx::exw();
    const auto r = recognize_sort_reduced(e.automaton);
    CHECK(r.outcome == SortOutcome::Wheeler);
    REQUIRE(r.order);
    CHECK(*r.order == e.order);

    const auto n = recognize_sort_reduced(fx::fig_non_wheeler());
    CHECK(n.outcome == SortOutcome::NotSingleton);
    CHECK(n.merged_blocks == Blocks{{1, 2}});

    const auto nw = edge_to_state_labeled(fx::re("abcdx", "ax*b|cx*d"));
    const auto v = recognize_sort_reduced(nw);
    CHECK(v.outcome == SortOutcome::NotWheeler);
    CHECK(!v.violations.empty());
    CHECK(oracles::exhaustive_wheeler_order(nw).empty());
}

namespace {

std::vector<StateLabeledNfa> small_fixtures() {
    std::vector<StateLabeledNfa> out{fx::exw().automaton, fx::fig_non_wheeler(), fx::fig_out_neq_a(),
                                     fx::det_example().automaton};
    const Alphabet ab = Alphabet::from_string("ab");
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        out.push_back(random_wnfa(ab, 3 + seed % 6, seed, 0.5).automaton);
        const auto d = random_dfa(ab, 2 + seed % 3, seed);
        const auto s = edge_to_state_labeled(d);
        if (s.size() <= 8) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("forward algorithm invariants") {
    for (const auto& a : small_fixtures()) {
        ForwardStats stats;
        const auto p = forward_stable_partition(a, &stats);
        CHECK(stats.outer_iterations <= a.size() + 1);
        CHECK(is_forward_stable(a, p));

        // covers Q, label homogeneous, starts with {0}
        std::vector<int> seen(a.size());
        for (const auto& b : p.blocks) {
            REQUIRE(!b.empty());
            for (State q : b) {
                ++seen[q];
                CHECK(a.label(q) == a.label(b.front()));
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        CHECK(p.blocks.front() == std::vector<State>{0});

        // states in one block read the same words
        for (const auto& b : p.blocks)
            for (State q : b) CHECK(oracles::incoming_words(a, q, 8) == oracles::incoming_words(a, b.front(), 8));

        // agreement with every Wheeler order
        const auto idx = p.block_index(a.size());
        const auto orders = oracles::exhaustive_wheeler_order(a);
        for (const auto& ord : orders)
            for (State u = 0; u < a.size(); ++u)
                for (State v = 0; v < a.size(); ++v)
                    if (idx[u] < idx[v]) CHECK(ord.pos(u) < ord.pos(v));

        // a Wheeler input gives a Wheeler quotient
        if (!orders.empty()) {
            const auto q = quotient_sorted(a);
            CHECK(check_wheeler(q.quotient, q.order).empty());
        }
    }
}
