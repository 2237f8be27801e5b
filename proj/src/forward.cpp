#include "wheeler/forward.hpp"

#include <algorithm>
#include <map>

#include "wheeler/error.hpp"

namespace wheeler {

std::vector<std::size_t> OrderedPartition::block_index(std::size_t states) const {
    std::vector<std::size_t> idx(states, SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (State q : blocks[b]) idx[q] = b;
    return idx;
}

namespace {

struct Block {
    std::vector<State> states;
    bool reached = false;
};

}  // namespace

OrderedPartition forward_stable_partition(const StateLabeledNfa& a, ForwardStats* stats) {
    const std::size_t n = a.size();
    ForwardStats local;
    ForwardStats& st = stats ? *stats : local;
    st = {};

    std::vector<Block> seq;
    seq.push_back({{0}, false});
    {
        std::map<Symbol, std::vector<State>> by_label;
        for (State q = 1; q < n; ++q) by_label[a.label(q)].push_back(q);
        for (auto& [label, qs] : by_label) seq.push_back({std::move(qs), false});
    }

    std::vector<bool> image(n, false);
    std::vector<State> touched;
    bool split = true;
    while (split) {
        ++st.outer_iterations;
        split = false;
        for (auto& b : seq) b.reached = false;
        for (std::size_t m = 0; m < seq.size() && !split; ++m) {
            ++st.modifier_steps;
            for (State q : seq[m].states)
                for (State r : a.successors(q))
                    if (!image[r]) {
                        image[r] = true;
                        touched.push_back(r);
                    }
            std::vector<Block> next;
            next.reserve(seq.size() + 1);
            for (auto& b : seq) {
                Block in{{}, true}, out{{}, false};
                for (State q : b.states) (image[q] ? in : out).states.push_back(q);
                if (!in.states.empty() && !out.states.empty()) {
                    split = true;
                    ++st.splits;
                }
                if (b.reached) {
                    out.reached = true;
                    if (!out.states.empty()) next.push_back(std::move(out));
                    if (!in.states.empty()) next.push_back(std::move(in));
                } else {
                    if (!in.states.empty()) next.push_back(std::move(in));
                    if (!out.states.empty()) next.push_back(std::move(out));
                }
            }
            seq = std::move(next);
            for (State r : touched) image[r] = false;
            touched.clear();
        }
    }

    OrderedPartition p;
    for (auto& b : seq) {
        p.blocks.push_back(std::move(b.states));
        p.reached.push_back(b.reached);
    }
    return p;
}

bool is_forward_stable(const StateLabeledNfa& a, const OrderedPartition& p) {
    const auto idx = p.block_index(a.size());
    for (const auto& ci : p.blocks) {
        std::vector<std::size_t> hits(p.size(), 0);
        std::vector<bool> image(a.size(), false);
        for (State q : ci)
            for (State r : a.successors(q))
                if (!image[r]) {
                    image[r] = true;
                    ++hits[idx[r]];
                }
        for (std::size_t j = 0; j < p.size(); ++j)
            if (hits[j] != 0 && hits[j] != p.blocks[j].size()) return false;
    }
    return true;
}

QuotientResult quotient_sorted(const StateLabeledNfa& a) {
    const auto p = forward_stable_partition(a);
    const auto idx = p.block_index(a.size());
    std::vector<State> class_map(a.size());
    for (State q = 0; q < a.size(); ++q) class_map[q] = static_cast<State>(idx[q]);
    std::vector<Symbol> labels;
    std::vector<State> finals;
    for (std::size_t b = 0; b < p.size(); ++b) {
        labels.push_back(a.label(p.blocks[b].front()));
        if (std::any_of(p.blocks[b].begin(), p.blocks[b].end(), [&](State q) { return a.is_final(q); }))
            finals.push_back(static_cast<State>(b));
    }
    std::vector<Edge> edges;
    for (const auto& e : a.edges()) edges.push_back({class_map[e.from], class_map[e.to]});
    return {StateLabeledNfa(a.alphabet(), std::move(labels), std::move(edges), std::move(finals)),
            WheelerOrder::identity(p.size()), std::move(class_map)};
}

const char* to_string(SortOutcome o) noexcept {
    switch (o) {
        case SortOutcome::Wheeler: return "Wheeler";
        case SortOutcome::NotWheeler: return "NotWheeler";
        case SortOutcome::NotSingleton: return "NotSingleton";
    }
    return "?";
}

SortResult recognize_sort_reduced(const StateLabeledNfa& a) {
    const auto p = forward_stable_partition(a);
    SortResult r{SortOutcome::Wheeler, std::nullopt, {}, {}};
    for (const auto& b : p.blocks)
        if (b.size() > 1) r.merged_blocks.push_back(b);
    if (!r.merged_blocks.empty()) {
        r.outcome = SortOutcome::NotSingleton;
        return r;
    }
    std::vector<State> perm;
    for (const auto& b : p.blocks) perm.push_back(b.front());
    r.order = WheelerOrder(std::move(perm));
    r.violations = check_wheeler(a, *r.order);
    if (!r.violations.empty()) r.outcome = SortOutcome::NotWheeler;
    return r;
}

std::vector<std::vector<State>> incoming_language_classes(const StateLabeledNfa& a, std::size_t max_subsets) {
    std::map<std::vector<State>, std::size_t> seen{{{0}, 0}};
    std::vector<std::vector<State>> subsets{{0}};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (Symbol s = 0; s < static_cast<Symbol>(a.alphabet().size()); ++s) {
            std::vector<State> next;
            for (State q : subsets[i])
                for (State r : a.successors(q))
                    if (a.label(r) == s) next.push_back(r);
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (seen.try_emplace(next, subsets.size()).second) {
                subsets.push_back(std::move(next));
                if (subsets.size() > max_subsets)
                    throw BudgetExceeded("incoming_language_classes: subset construction", subsets.size(), max_subsets);
            }
        }
    }
    // I_u = I_v iff u and v lie in exactly the same reachable subsets.
    std::vector<std::vector<std::size_t>> signature(a.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (State q : subsets[i]) signature[q].push_back(i);
    std::map<std::vector<std::size_t>, std::vector<State>> groups;
    for (State q = 0; q < a.size(); ++q) groups[signature[q]].push_back(q);
    std::vector<std::vector<State>> out;
    for (auto& [sig, qs] : groups) out.push_back(std::move(qs));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wheeler
