#include "wheeler/determinize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "wheeler/error.hpp"

namespace wheeler {

namespace detail {

Determinization interval_determinize(const StateLabeledNfa& a, const WheelerOrder& ord) {
    const auto k = static_cast<Symbol>(a.alphabet().size());
    std::vector<IntervalState> states{{StateInterval::of(ord.pos(0), ord.pos(0)), kHash}};
    std::map<std::pair<std::size_t, std::size_t>, State> id{{{ord.pos(0), ord.pos(0)}, 0}};
    std::vector<Edge> edges;

    std::vector<std::size_t> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::fill(lo.begin(), lo.end(), SIZE_MAX);
        std::fill(hi.begin(), hi.end(), 0);
        const auto iv = states[i].interval;
        for (std::size_t p = iv.lo; p <= iv.hi; ++p)
            for (State r : a.successors(ord.at(p))) {
                const auto s = static_cast<std::size_t>(a.label(r));
                lo[s] = std::min(lo[s], ord.pos(r));
                hi[s] = std::max(hi[s], ord.pos(r));
            }
        for (Symbol s = 0; s < k; ++s) {
            const auto si = static_cast<std::size_t>(s);
            if (lo[si] == SIZE_MAX) continue;
            auto [it, inserted] = id.try_emplace({lo[si], hi[si]}, static_cast<State>(states.size()));
            if (inserted) states.push_back({StateInterval::of(lo[si], hi[si]), s});
            edges.push_back({static_cast<State>(i), it->second});
        }
    }

    // <^i within each label class: ascending lo + hi.
    std::vector<State> perm(states.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](State x, State y) {
        const auto& X = states[x];
        const auto& Y = states[y];
        return std::tuple(X.label, X.interval.lo + X.interval.hi, X.interval.lo) <
               std::tuple(Y.label, Y.interval.lo + Y.interval.hi, Y.interval.lo);
    });
    std::vector<State> rank(states.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<State>(i);

    std::vector<Symbol> labels(states.size());
    std::vector<IntervalState> intervals(states.size());
    std::vector<State> finals;
    for (std::size_t i = 0; i < states.size(); ++i) {
        labels[rank[i]] = states[i].label;
        intervals[rank[i]] = states[i];
        const auto iv = states[i].interval;
        for (std::size_t p = iv.lo; p <= iv.hi; ++p)
            if (a.is_final(ord.at(p))) {
                finals.push_back(rank[i]);
                break;
            }
    }
    for (auto& e : edges) e = {rank[e.from], rank[e.to]};
    return {StateLabeledNfa(a.alphabet(), std::move(labels), std::move(edges), std::move(finals)),
            WheelerOrder::identity(states.size()), std::move(intervals)};
}

}  // namespace detail

Determinization wheeler_determinize(const StateLabeledNfa& a, const WheelerOrder& ord) {
    if (auto v = check_wheeler(a, ord); !v.empty())
        throw UsageError("wheeler_determinize: not a Wheeler order (" + describe(v.front()) + ")");
    std::vector<bool> used(a.alphabet().size(), false);
    for (State q = 1; q < a.size(); ++q) used[static_cast<std::size_t>(a.label(q))] = true;
    for (std::size_t s = 0; s < used.size(); ++s)
        if (!used[s])
            throw UsageError(std::string("wheeler_determinize: symbol '") +
                             a.alphabet().symbol(static_cast<Symbol>(s)) + "' labels no state");
    return detail::interval_determinize(a, ord);
}

std::size_t determinization_bound(std::size_t states, std::size_t alphabet_size) {
    return 2 * states - 1 - alphabet_size;
}

bool has_prefix_suffix_property(const std::vector<StateInterval>& family) {
    for (const auto& I : family)
        for (const auto& J : family) {
            if (I.empty || J.empty) return false;
            const bool contained = J.lo <= I.lo && I.hi <= J.hi;
            if (contained && I.lo != J.lo && I.hi != J.hi) return false;
        }
    return true;
}

std::vector<StateInterval> tight_interval_family(std::size_t n) {
    std::vector<StateInterval> out{StateInterval::of(0, n - 1)};
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(StateInterval::of(0, i));
    for (std::size_t i = 1; i < n; ++i) out.push_back(StateInterval::of(i, n - 1));
    return out;
}

}  // namespace wheeler
