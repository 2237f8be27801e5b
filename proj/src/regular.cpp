#include "wheeler/regular.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "wheeler/dfa_ops.hpp"
#include "wheeler/error.hpp"

namespace wheeler {

State EdgeNfa::embed(const EdgeLabeledDfa& d) {
    const auto base = static_cast<State>(states);
    states += d.size();
    for (const auto& e : d.edges()) edges.push_back({base + e.from, e.symbol, base + e.to});
    return base;
}

EdgeNfa EdgeNfa::from_dfa(const EdgeLabeledDfa& d) {
    EdgeNfa a{d.alphabet(), 0, {}, {0}, {}};
    a.embed(d);
    a.finals = d.finals();
    return a;
}

EdgeLabeledDfa determinize_nfa(const EdgeNfa& a, std::size_t max_subsets) {
    const auto k = static_cast<Symbol>(a.alphabet.size());
    std::vector<std::vector<State>> eps(a.states);
    std::vector<std::vector<std::vector<State>>> step(a.states, std::vector<std::vector<State>>(k));
    for (const auto& e : a.edges) {
        if (e.from >= a.states || e.to >= a.states) throw UsageError("determinize_nfa: state out of range");
        if (e.symbol == kEpsilon)
            eps[e.from].push_back(e.to);
        else if (a.alphabet.contains(e.symbol))
            step[e.from][static_cast<std::size_t>(e.symbol)].push_back(e.to);
        else
            throw UsageError("determinize_nfa: symbol outside the alphabet");
    }
    std::vector<bool> is_final(a.states, false);
    for (State f : a.finals) is_final.at(f) = true;

    auto closure = [&](std::vector<State> set) {
        std::vector<bool> in(a.states, false);
        for (State q : set) in[q] = true;
        for (std::size_t i = 0; i < set.size(); ++i)
            for (State r : eps[set[i]])
                if (!in[r]) {
                    in[r] = true;
                    set.push_back(r);
                }
        std::sort(set.begin(), set.end());
        return set;
    };

    std::map<std::vector<State>, State> id;
    std::vector<std::vector<State>> subsets{closure(a.initials)};
    id[subsets[0]] = 0;
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (Symbol s = 0; s < k; ++s) {
            std::vector<State> next;
            for (State q : subsets[i])
                for (State r : step[q][static_cast<std::size_t>(s)]) next.push_back(r);
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            next = closure(std::move(next));
            auto [it, inserted] = id.try_emplace(next, static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(std::move(next));
                if (subsets.size() > max_subsets)
                    throw BudgetExceeded("determinize_nfa: subset construction", subsets.size(), max_subsets);
            }
            edges.push_back({static_cast<State>(i), s, it->second});
        }
    }
    std::vector<State> finals;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (std::any_of(subsets[i].begin(), subsets[i].end(), [&](State q) { return is_final[q]; }))
            finals.push_back(static_cast<State>(i));
    return trim(EdgeLabeledDfa(a.alphabet, subsets.size(), edges, std::move(finals)));
}

namespace {

// Thompson construction over a recursive-descent parse.
class RegexParser {
public:
    RegexParser(const Alphabet& alphabet, std::string_view text) : text_(text), nfa_{alphabet, 0, {}, {}, {}} {}

    EdgeNfa parse() {
        auto f = alternation();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        nfa_.initials = {f.start};
        nfa_.finals = {f.end};
        return std::move(nfa_);
    }

private:
    struct Fragment {
        State start, end;
    };

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("regex: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Fragment epsilon() {
        const State s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_edge(s, kEpsilon, e);
        return {s, e};
    }

    Fragment alternation() {
        auto f = concatenation();
        while (peek('|')) {
            ++pos_;
            auto g = concatenation();
            const State s = nfa_.add_state(), e = nfa_.add_state();
            nfa_.add_edge(s, kEpsilon, f.start);
            nfa_.add_edge(s, kEpsilon, g.start);
            nfa_.add_edge(f.end, kEpsilon, e);
            nfa_.add_edge(g.end, kEpsilon, e);
            f = {s, e};
        }
        return f;
    }

    Fragment concatenation() {
        std::optional<Fragment> f;
        while (true) {
            skip();
            if (pos_ == text_.size() || text_[pos_] == '|' || text_[pos_] == ')') break;
            auto g = repetition();
            if (f) {
                nfa_.add_edge(f->end, kEpsilon, g.start);
                f->end = g.end;
            } else {
                f = g;
            }
        }
        return f ? *f : epsilon();
    }

    Fragment repetition() {
        auto f = atom();
        while (peek('*') || peek('+') || peek('?')) {
            const char op = text_[pos_++];
            const State s = nfa_.add_state(), e = nfa_.add_state();
            nfa_.add_edge(s, kEpsilon, f.start);
            nfa_.add_edge(f.end, kEpsilon, e);
            if (op != '+') nfa_.add_edge(s, kEpsilon, e);
            if (op != '?') nfa_.add_edge(f.end, kEpsilon, f.start);
            f = {s, e};
        }
        return f;
    }

    Fragment atom() {
        skip();
        if (pos_ == text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto f = alternation();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            return f;
        }
        const auto r = nfa_.alphabet.rank(c);
        if (!r) fail(std::string("symbol '") + c + "' not in the alphabet");
        ++pos_;
        const State s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_edge(s, *r, e);
        return {s, e};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    EdgeNfa nfa_;
};

}  // namespace

EdgeLabeledDfa regex_dfa(const Alphabet& alphabet, std::string_view pattern) {
    return minimize_dfa(determinize_nfa(RegexParser(alphabet, pattern).parse()));
}

}  // namespace wheeler
