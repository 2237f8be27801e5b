#include "wheeler/aut_format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "wheeler/error.hpp"

namespace wheeler {

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

struct Line {
    std::size_t no;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t no = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++no;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            const std::size_t b = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > b) line.tokens.push_back({std::string(raw.substr(b, i - b)), b + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

struct Located {
    std::size_t line, col;
};

std::size_t to_number(const Line& l, const Token& t) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(l.no, t.col, "expected a non-negative integer, got '" + t.text + "'");
    return v;
}

struct StateRef {
    std::size_t value;
    Located at;
};

}  // namespace

AutFile parse_aut(std::string_view text) {
    const auto lines = tokenize(text);
    std::map<std::string, Located> seen;
    std::optional<bool> state_labeled;
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::vector<StateRef> finals;
    struct LabelLine {
        StateRef q;
        Token sym;
        std::size_t line;
    };
    std::vector<LabelLine> labels;
    struct TransLine {
        StateRef from;
        std::optional<Token> sym;
        StateRef to;
        std::size_t line;
    };
    std::vector<TransLine> trans;
    std::optional<std::vector<StateRef>> order;
    std::size_t order_line = 0;

    auto header_once = [&](const Line& l, const std::string& key) {
        if (seen.count(key)) throw ParseError(l.no, 1, "duplicate '" + key + ":' line");
        seen[key] = {l.no, 1};
    };
    auto want_args = [](const Line& l, std::size_t n) {
        if (l.tokens.size() - 1 != n) {
            const std::size_t col = l.tokens.size() > n + 1 ? l.tokens[n + 1].col : l.tokens.back().col;
            throw ParseError(l.no, col, "'" + l.tokens[0].text + "' takes " + std::to_string(n) + " argument(s)");
        }
    };
    auto ref = [](const Line& l, const Token& t) { return StateRef{to_number(l, t), {l.no, t.col}}; };

    for (const Line& l : lines) {
        const Token& head = l.tokens[0];
        if (head.text.size() < 2 || head.text.back() != ':')
            throw ParseError(l.no, head.col, "expected 'key:' at the start of the line");
        const std::string key = head.text.substr(0, head.text.size() - 1);
        if (key == "type") {
            header_once(l, key);
            want_args(l, 1);
            if (l.tokens[1].text == "state-labeled")
                state_labeled = true;
            else if (l.tokens[1].text == "edge-labeled")
                state_labeled = false;
            else
                throw ParseError(l.no, l.tokens[1].col, "unknown type '" + l.tokens[1].text + "'");
        } else if (key == "alphabet") {
            header_once(l, key);
            std::vector<char> syms;
            std::set<char> dup;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const Token& t = l.tokens[i];
                if (t.text.size() != 1) throw ParseError(l.no, t.col, "symbols are single characters");
                if (!dup.insert(t.text[0]).second) throw ParseError(l.no, t.col, "duplicate symbol '" + t.text + "'");
                syms.push_back(t.text[0]);
            }
            try {
                alphabet = Alphabet(syms);
            } catch (const UsageError& e) {
                throw ParseError(l.no, head.col, e.what());
            }
        } else if (key == "states") {
            header_once(l, key);
            want_args(l, 1);
            states = to_number(l, l.tokens[1]);
            if (*states == 0) throw ParseError(l.no, l.tokens[1].col, "an automaton needs at least one state");
        } else if (key == "initial") {
            header_once(l, key);
            want_args(l, 1);
            if (to_number(l, l.tokens[1]) != 0) throw ParseError(l.no, l.tokens[1].col, "the initial state must be 0");
        } else if (key == "final") {
            header_once(l, key);
            for (std::size_t i = 1; i < l.tokens.size(); ++i) finals.push_back(ref(l, l.tokens[i]));
        } else if (key == "label") {
            want_args(l, 2);
            labels.push_back({ref(l, l.tokens[1]), l.tokens[2], l.no});
        } else if (key == "trans") {
            if (l.tokens.size() == 3)
                trans.push_back({ref(l, l.tokens[1]), std::nullopt, ref(l, l.tokens[2]), l.no});
            else if (l.tokens.size() == 4)
                trans.push_back({ref(l, l.tokens[1]), l.tokens[2], ref(l, l.tokens[3]), l.no});
            else
                throw ParseError(l.no, head.col, "'trans:' takes 2 (state-labeled) or 3 (edge-labeled) arguments");
        } else if (key == "order") {
            header_once(l, key);
            order.emplace();
            order_line = l.no;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) order->push_back(ref(l, l.tokens[i]));
        } else {
            throw ParseError(l.no, head.col, "unknown key '" + key + "'");
        }
    }

    const std::size_t eof = (lines.empty() ? 0 : lines.back().no) + 1;
    for (const char* k : {"type", "alphabet", "states", "initial"})
        if (!seen.count(k)) throw ParseError(eof, 1, std::string("missing '") + k + ":' line");
    const std::size_t n = *states;
    auto check = [&](const StateRef& r) {
        if (r.value >= n)
            throw ParseError(r.at.line, r.at.col,
                             "state " + std::to_string(r.value) + " out of range (states: " + std::to_string(n) + ")");
        return static_cast<State>(r.value);
    };
    auto symbol = [&](const Token& t, std::size_t line) {
        const auto r = t.text.size() == 1 ? alphabet->rank(t.text[0]) : std::nullopt;
        if (!r) throw ParseError(line, t.col, "'" + t.text + "' is not in the alphabet");
        return *r;
    };

    std::vector<State> final_states;
    std::set<State> final_seen;
    for (const auto& f : finals) {
        const State q = check(f);
        if (!final_seen.insert(q).second) throw ParseError(f.at.line, f.at.col, "state listed twice in 'final:'");
        final_states.push_back(q);
    }

    AutFile out{empty_dfa(*alphabet), std::nullopt};
    if (*state_labeled) {
        std::vector<Symbol> lab(n, kHash);
        std::vector<bool> has(n, false);
        for (const auto& l : labels) {
            const State q = check(l.q);
            if (q == 0) throw ParseError(l.line, l.q.at.col, "the initial state carries no label");
            if (has[q]) throw ParseError(l.line, l.q.at.col, "state " + std::to_string(q) + " labeled twice");
            has[q] = true;
            lab[q] = symbol(l.sym, l.line);
        }
        for (State q = 1; q < n; ++q)
            if (!has[q]) throw ParseError(eof, 1, "state " + std::to_string(q) + " has no label");
        std::set<Edge> edges;
        for (const auto& t : trans) {
            if (t.sym) throw ParseError(t.line, t.sym->col, "state-labeled transitions are 'trans: p q'");
            const Edge e{check(t.from), check(t.to)};
            if (!edges.insert(e).second) throw ParseError(t.line, t.from.at.col, "duplicate transition");
        }
        out.automaton = StateLabeledNfa(*alphabet, std::move(lab), {edges.begin(), edges.end()}, final_states);
    } else {
        if (!labels.empty()) throw ParseError(labels[0].line, 1, "'label:' lines need type state-labeled");
        std::set<std::pair<State, Symbol>> keys;
        std::vector<LabeledEdge> edges;
        for (const auto& t : trans) {
            if (!t.sym) throw ParseError(t.line, t.from.at.col, "edge-labeled transitions are 'trans: p sym q'");
            const LabeledEdge e{check(t.from), symbol(*t.sym, t.line), check(t.to)};
            if (!keys.insert({e.from, e.symbol}).second)
                throw ParseError(t.line, t.from.at.col, "second transition on the same symbol (not deterministic)");
            edges.push_back(e);
        }
        out.automaton = EdgeLabeledDfa(*alphabet, n, edges, final_states);
    }
    if (order) {
        std::vector<State> perm;
        std::vector<bool> used(n, false);
        for (const auto& r : *order) {
            const State q = check(r);
            if (used[q]) throw ParseError(r.at.line, r.at.col, "state repeated in 'order:'");
            used[q] = true;
            perm.push_back(q);
        }
        if (perm.size() != n) throw ParseError(order_line, 1, "'order:' must list every state exactly once");
        if (perm.front() != 0) throw ParseError(order_line, (*order)[0].at.col, "'order:' must start with 0");
        out.order = WheelerOrder(std::move(perm));
    }
    return out;
}

namespace {

std::string header(const char* type, const Alphabet& alphabet, std::size_t n, const std::vector<State>& finals) {
    std::ostringstream os;
    os << "type: " << type << "\nalphabet:";
    for (char c : alphabet.symbols()) os << ' ' << c;
    os << "\nstates: " << n << "\ninitial: 0\nfinal:";
    for (State f : finals) os << ' ' << f;
    os << '\n';
    return os.str();
}

}  // namespace

std::string serialize_aut(const StateLabeledNfa& a, const std::optional<WheelerOrder>& order) {
    std::ostringstream os;
    os << header("state-labeled", a.alphabet(), a.size(), a.finals());
    for (State q = 1; q < a.size(); ++q) os << "label: " << q << ' ' << a.alphabet().symbol(a.label(q)) << '\n';
    for (const auto& e : a.edges()) os << "trans: " << e.from << ' ' << e.to << '\n';
    if (order) {
        os << "order:";
        for (State q : order->perm()) os << ' ' << q;
        os << '\n';
    }
    return os.str();
}

std::string serialize_aut(const EdgeLabeledDfa& d) {
    std::ostringstream os;
    os << header("edge-labeled", d.alphabet(), d.size(), d.finals());
    for (const auto& e : d.edges())
        os << "trans: " << e.from << ' ' << d.alphabet().symbol(e.symbol) << ' ' << e.to << '\n';
    return os.str();
}

std::string serialize_aut(const AutFile& f) {
    return f.state_labeled() ? serialize_aut(f.nfa(), f.order) : serialize_aut(f.dfa());
}

std::string export_dot(const StateLabeledNfa& a, const std::optional<WheelerOrder>& order) {
    std::ostringstream os;
    os << "digraph wheeler {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n  start -> 0;\n";
    for (State q = 0; q < a.size(); ++q) {
        os << "  " << q << " [label=\"" << q << ':' << a.alphabet().symbol(a.label(q));
        if (order) os << " @" << order->pos(q);
        os << '"';
        if (a.is_final(q)) os << ", shape=doublecircle";
        if (order) os << ", order=" << order->pos(q);
        os << "];\n";
    }
    for (const auto& e : a.edges()) os << "  " << e.from << " -> " << e.to << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const EdgeLabeledDfa& d) {
    std::ostringstream os;
    os << "digraph wheeler {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n  start -> 0;\n";
    for (State q = 0; q < d.size(); ++q) {
        os << "  " << q << " [label=\"" << q << '"';
        if (d.is_final(q)) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& e : d.edges())
        os << "  " << e.from << " -> " << e.to << " [label=\"" << d.alphabet().symbol(e.symbol) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace wheeler
