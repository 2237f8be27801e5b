#include "wheeler/minimal_wdfa.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "wheeler/dfa_ops.hpp"
#include "wheeler/error.hpp"
#include "wheeler/language_decision.hpp"

namespace wheeler {

MnPartition mn_partition(const StateLabeledNfa& w) {
    if (!w.is_deterministic()) throw UsageError("mn_partition: automaton is not deterministic");
    MnPartition p;
    p.class_of = myhill_nerode_classes(state_to_edge_labeled(w));
    for (auto c : p.class_of) p.classes = std::max<std::size_t>(p.classes, c + 1);
    return p;
}

std::vector<ColexRun> colex_runs(const StateLabeledNfa& w, const WheelerOrder& ord, const MnPartition& mn) {
    std::vector<ColexRun> runs;
    for (std::size_t pos = 0; pos < ord.size(); ++pos) {
        const State q = ord.at(pos);
        const Symbol label = w.label(q);
        const auto cls = mn.class_of[q];
        if (!runs.empty() && runs.back().label == label && runs.back().mn_class == cls)
            runs.back().hi = pos;
        else
            runs.push_back({pos, pos, label, cls});
    }
    return runs;
}

OrderedNfa minimize_wdfa(const StateLabeledNfa& w, const WheelerOrder& ord) {
    if (!w.is_deterministic()) throw UsageError("minimize_wdfa: automaton is not deterministic");
    if (ord.size() != w.size() || !check_wheeler(w, ord).empty())
        throw UsageError("minimize_wdfa: order is not a Wheeler order of the automaton");
    const auto mn = mn_partition(w);
    const auto runs = colex_runs(w, ord, mn);
    std::vector<State> run_of(w.size());
    for (std::size_t r = 0; r < runs.size(); ++r)
        for (std::size_t pos = runs[r].lo; pos <= runs[r].hi; ++pos) run_of[ord.at(pos)] = static_cast<State>(r);
    std::vector<Symbol> labels;
    std::vector<State> finals;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        labels.push_back(runs[r].label);
        if (w.is_final(ord.at(runs[r].lo))) finals.push_back(static_cast<State>(r));
    }
    std::vector<Edge> edges;
    for (const auto& e : w.edges()) edges.push_back({run_of[e.from], run_of[e.to]});
    StateLabeledNfa out(w.alphabet(), std::move(labels), std::move(edges), std::move(finals));
    if (!out.is_deterministic()) throw std::logic_error("minimize_wdfa: merged automaton is nondeterministic");
    return {std::move(out), WheelerOrder::identity(runs.size())};
}

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

std::uint8_t sym_byte(Symbol s) { return static_cast<std::uint8_t>(s); }
Symbol byte_sym(std::uint64_t b) { return b == 0xff ? kHash : static_cast<Symbol>(b); }

// Words built by appending one symbol at a time; equal words share a cell.
class WordArena {
public:
    static constexpr std::uint32_t kEmpty = 0;

    WordArena() { cells_.push_back({kNone, kHash}); }

    std::uint32_t append(std::uint32_t w, Symbol c) {
        if (w == kNone) return kNone;
        const std::uint64_t key = (std::uint64_t{w} << 8) | sym_byte(c);
        auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(cells_.size()));
        if (inserted) cells_.push_back({w, c});
        return it->second;
    }

    Ordering3 compare(std::uint32_t a, std::uint32_t b) const {
        while (a != b) {
            if (a == kEmpty) return Ordering3::Less;
            if (b == kEmpty) return Ordering3::Greater;
            if (cells_[a].sym != cells_[b].sym)
                return cells_[a].sym < cells_[b].sym ? Ordering3::Less : Ordering3::Greater;
            a = cells_[a].prev;
            b = cells_[b].prev;
        }
        return Ordering3::Equal;
    }

private:
    struct Cell {
        std::uint32_t prev;
        Symbol sym;
    };
    std::vector<Cell> cells_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Interned maps Q -> Q ∪ {⊥}; f_w(q) = δ(q, w).
class Transforms {
public:
    explicit Transforms(const EdgeLabeledDfa& d) : d_(d), k_(static_cast<Symbol>(d.alphabet().size())) {
        std::vector<State> id(d.size());
        for (State q = 0; q < d.size(); ++q) id[q] = q;
        intern(std::move(id));
    }

    /// f_{c·w} = f_w ∘ δ_c, or kNone when undefined everywhere.
    std::uint32_t child(std::uint32_t f, Symbol c) {
        auto& slot = memo_[f][static_cast<std::size_t>(c)];
        if (slot != kUnknown) return slot;
        std::vector<State> g(d_.size(), kNoState);
        bool any = false;
        for (State q = 0; q < d_.size(); ++q) {
            const State r = d_.next(q, c);
            if (r == kNoState) continue;
            g[q] = maps_[f][r];
            any = any || g[q] != kNoState;
        }
        const std::uint32_t id = any ? intern(std::move(g)) : kNone;
        memo_[f][static_cast<std::size_t>(c)] = id;
        return id;
    }

    State at_initial(std::uint32_t f) const { return maps_[f][0]; }

private:
    static constexpr std::uint32_t kUnknown = UINT32_MAX - 1;

    std::uint32_t intern(std::vector<State> g) {
        auto [it, inserted] = ids_.try_emplace(g, static_cast<std::uint32_t>(maps_.size()));
        if (inserted) {
            maps_.push_back(std::move(g));
            memo_.emplace_back(static_cast<std::size_t>(k_), kUnknown);
        }
        return it->second;
    }

    const EdgeLabeledDfa& d_;
    Symbol k_;
    std::vector<std::vector<State>> maps_;
    std::map<std::vector<State>, std::uint32_t> ids_;
    std::vector<std::vector<std::uint32_t>> memo_;
};

std::uint64_t node_key(std::uint32_t f, Symbol end) { return (std::uint64_t{f} << 8) | sym_byte(end); }
std::int64_t tag_of(State q, Symbol end) { return (static_cast<std::int64_t>(q) << 8) | sym_byte(end); }
State tag_state(std::int64_t tag) { return static_cast<State>(tag >> 8); }
Symbol tag_end(std::int64_t tag) { return byte_sym(static_cast<std::uint64_t>(tag) & 0xff); }

// A maximal colex run of equally tagged prefixes; "short" words are those at most depth-1 long.
struct Run {
    std::int64_t tag;
    std::uint32_t min, max, min_short, max_short;
};

void emit(std::vector<Run>& runs, const Run& r) {
    if (runs.empty() || runs.back().tag != r.tag) {
        runs.push_back(r);
        return;
    }
    Run& b = runs.back();
    b.max = r.max;
    if (b.min_short == kNone) b.min_short = r.min_short;
    if (r.max_short != kNone) b.max_short = r.max_short;
}

struct Attempt {
    std::optional<StateLabeledNfa> wdfa;
    std::size_t runs = 0;
};

// Runs of Pref(L) up to `depth`, in colex order. The prefix tree is explored on reversed words:
// node w has children c·w, so a preorder with children in rank order is the colex order.
std::vector<Run> enumerate_runs(const EdgeLabeledDfa& d, std::size_t depth, std::size_t budget, WordArena& arena) {
    const auto k = static_cast<Symbol>(d.alphabet().size());
    Transforms tf(d);
    std::vector<std::vector<std::uint64_t>> levels{{node_key(0, kHash)}};
    for (std::size_t t = 1; t <= depth; ++t) {
        std::vector<std::uint64_t> next;
        for (auto key : levels.back()) {
            const auto f = static_cast<std::uint32_t>(key >> 8);
            const Symbol end = byte_sym(key & 0xff);
            for (Symbol c = 0; c < k; ++c) {
                const auto g = tf.child(f, c);
                if (g != kNone) next.push_back(node_key(g, t == 1 ? c : end));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) break;
        if (next.size() > budget) throw BudgetExceeded("min_wdfa_from_dfa: prefix tree level", next.size(), budget);
        levels.push_back(std::move(next));
    }

    std::unordered_map<std::uint64_t, std::vector<Run>> below;
    for (std::size_t t = levels.size(); t-- > 0;) {
        std::unordered_map<std::uint64_t, std::vector<Run>> here;
        std::size_t total = 0;
        for (auto key : levels[t]) {
            const auto f = static_cast<std::uint32_t>(key >> 8);
            const Symbol end = byte_sym(key & 0xff);
            std::vector<Run> runs;
            if (const State q = tf.at_initial(f); q != kNoState) {
                const std::uint32_t s = t < depth ? WordArena::kEmpty : kNone;
                runs.push_back({tag_of(q, end), WordArena::kEmpty, WordArena::kEmpty, s, s});
            }
            if (t < depth) {
                for (Symbol c = 0; c < k; ++c) {
                    const auto g = tf.child(f, c);
                    if (g == kNone) continue;
                    for (const Run& r : below.at(node_key(g, t == 0 ? c : end)))
                        emit(runs, {r.tag, arena.append(r.min, c), arena.append(r.max, c),
                                    arena.append(r.min_short, c), arena.append(r.max_short, c)});
                }
            }
            total += runs.size();
            if (total > budget) throw BudgetExceeded("min_wdfa_from_dfa: colex runs", total, budget);
            here.emplace(key, std::move(runs));
        }
        below.swap(here);
    }
    return std::move(below.at(levels[0][0]));
}

Attempt attempt(const EdgeLabeledDfa& d, std::size_t depth, std::size_t budget) {
    WordArena arena;
    const auto runs = enumerate_runs(d, depth, budget, arena);
    Attempt out;
    out.runs = runs.size();
    if (runs.empty() || runs[0].tag != tag_of(0, kHash)) return out;

    auto locate = [&](std::uint32_t w) -> std::uint32_t {
        auto it = std::partition_point(runs.begin(), runs.end(),
                                       [&](const Run& r) { return arena.compare(r.max, w) == Ordering3::Less; });
        if (it == runs.end() || arena.compare(it->min, w) == Ordering3::Greater) return kNone;
        return static_cast<std::uint32_t>(it - runs.begin());
    };

    const auto k = static_cast<Symbol>(d.alphabet().size());
    std::vector<bool> seen(runs.size(), false);
    std::vector<std::uint32_t> queue{0};
    seen[0] = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> moves;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Run& r = runs[queue[i]];
        const State q = tag_state(r.tag);
        for (Symbol c = 0; c < k; ++c) {
            const State to = d.next(q, c);
            if (to == kNoState) continue;
            if (r.min_short == kNone) return out;
            const auto j = locate(arena.append(r.min_short, c));
            if (j == kNone || locate(arena.append(r.max_short, c)) != j || runs[j].tag != tag_of(to, c)) return out;
            moves.push_back({queue[i], j});
            if (!seen[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    // keep colex order: state i is the i-th reached run
    std::vector<State> id(runs.size(), kNoState);
    std::vector<Symbol> labels;
    std::vector<State> finals;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (!seen[r]) continue;
        id[r] = static_cast<State>(labels.size());
        labels.push_back(tag_end(runs[r].tag));
        if (d.is_final(tag_state(runs[r].tag))) finals.push_back(id[r]);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : moves) edges.push_back({id[a], id[b]});
    StateLabeledNfa cand(d.alphabet(), std::move(labels), std::move(edges), std::move(finals));

    const auto ord = WheelerOrder::identity(cand.size());
    if (!cand.is_deterministic() || !check_wheeler(cand, ord).empty()) return out;
    if (!language_equiv(state_to_edge_labeled(cand), d)) return out;
    if (minimize_wdfa(cand, ord).automaton.size() != cand.size()) return out;
    out.wdfa = std::move(cand);
    return out;
}

}  // namespace

MinWdfaReport min_wdfa_from_dfa_report(const EdgeLabeledDfa& input, std::size_t depth, std::size_t run_budget) {
    const EdgeLabeledDfa d = minimize_dfa(input);
    if (is_empty(d)) {
        return {{StateLabeledNfa(d.alphabet(), {kHash}, {}, {}), WheelerOrder::identity(1)}, 0, 1, {}};
    }
    const std::size_t first = depth != 0 ? depth : decision_bound(d.size());
    MinWdfaReport report{{StateLabeledNfa(d.alphabet(), {kHash}, {}, {}), WheelerOrder::identity(1)}, 0, 0, {}};
    bool over_budget = false;
    for (std::size_t dep = first; dep <= 4 * first; dep *= 2) {
        try {
            auto a = attempt(d, dep, run_budget);
            report.tried.push_back(a.runs);
            if (a.wdfa) {
                const auto n = a.wdfa->size();
                report.wdfa = {std::move(*a.wdfa), WheelerOrder::identity(n)};
                report.depth = dep;
                report.runs = a.runs;
                return report;
            }
        } catch (const BudgetExceeded&) {
            over_budget = true;
            break;
        }
    }
    bool not_wheeler;
    try {
        not_wheeler = !decide_wheeler(d).wheeler;
    } catch (const BudgetExceeded&) {
        // the run count keeps growing with depth when the classes are not of finite index
        const auto& t = report.tried;
        not_wheeler = t.size() >= 2 && std::is_sorted(t.begin(), t.end()) &&
                      std::adjacent_find(t.begin(), t.end()) == t.end();
        not_wheeler = not_wheeler || (over_budget && t.empty());
    }
    if (not_wheeler) throw NotWheelerInput("min_wdfa_from_dfa: the language is not Wheeler");
    throw DepthExhausted("min_wdfa_from_dfa: no validated WDFA up to depth " + std::to_string(4 * first));
}

OrderedNfa min_wdfa_from_dfa(const EdgeLabeledDfa& d, std::size_t depth) {
    return min_wdfa_from_dfa_report(d, depth).wdfa;
}

}  // namespace wheeler
