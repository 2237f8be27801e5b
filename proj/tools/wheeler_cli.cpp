// wheeler: command-line front end. Exit codes: 0 ok, 1 negative verdict, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "wheeler/aut_format.hpp"
#include "wheeler/constructions.hpp"
#include "wheeler/determinize.hpp"
#include "wheeler/dfa_ops.hpp"
#include "wheeler/error.hpp"
#include "wheeler/forward.hpp"
#include "wheeler/language_decision.hpp"
#include "wheeler/minimal_wdfa.hpp"
#include "wheeler/oracles.hpp"
#include "wheeler/regular.hpp"

using namespace wheeler;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

AutFile load(const std::string& path) { return parse_aut(read_input(path)); }

// Summary records go to stdout unless the automaton itself is being written there.
std::ostream& records(const std::string& out) { return out == "-" ? std::cerr : std::cout; }

std::string join(const std::vector<State>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

EdgeLabeledDfa as_dfa(const AutFile& f) {
    if (!f.state_labeled()) return f.dfa();
    const auto& a = f.nfa();
    if (a.is_deterministic()) return state_to_edge_labeled(a);
    // NFA input: powerset construction, exponential in the worst case
    EdgeNfa n{a.alphabet(), a.size(), {}, {0}, a.finals()};
    for (const auto& e : a.edges()) n.add_edge(e.from, a.label(e.to), e.to);
    return determinize_nfa(n);
}

StateLabeledNfa as_nfa(const AutFile& f) { return f.state_labeled() ? f.nfa() : edge_to_state_labeled(f.dfa()); }

WheelerOrder require_order(const AutFile& f, const StateLabeledNfa& a) {
    if (f.state_labeled() && f.order) return *f.order;
    auto r = recognize_sort_reduced(a);
    if (r.outcome == SortOutcome::Wheeler) return *r.order;
    throw UsageError("no 'order:' line and the forward algorithm found no Wheeler order");
}

Word parse_word(const Alphabet& alphabet, const std::string& text) { return alphabet.parse_word(text); }

std::vector<Word> parse_words(const Alphabet& alphabet, const std::vector<std::string>& texts) {
    std::vector<Word> out;
    for (const auto& t : texts) out.push_back(parse_word(alphabet, t));
    return out;
}

std::string witness_record(const Alphabet& alphabet, const NotWheelerWitness& w) {
    return "u=" + std::to_string(w.u) + " v=" + std::to_string(w.v) + " mu=" + alphabet.format(w.mu) +
           " nu=" + alphabet.format(w.nu) + " gamma=" + alphabet.format(w.gamma);
}

std::string alphabet_of(const std::string& word) {
    std::string s = word;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wheeler automata and Wheeler languages"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string in = "-", in2, out = "-", order_text, alphabet_text, word, lo, hi, kind = "open", prefix, suffix,
                op_name, gen_name, oracle_name;
    std::size_t max_len = 6, depth = 0, budget = 200'000'000, m = 1, tail = 2, cycle = 1, states = 4;
    std::uint64_t seed = 1;
    bool exhaustive = false, random = false;
    std::vector<std::string> words;
    std::vector<State> finals;

    auto input = [&](CLI::App* c) { c->add_option("file", in, "input .aut file, - for stdin")->required(); };
    auto output = [&](CLI::App* c) { c->add_option("-o,--output", out, "output .aut file, - for stdout"); };

    auto* validate_cmd = app.add_subcommand("validate", "structural checks");
    input(validate_cmd);
    validate_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            const auto v = f.state_labeled() ? validate(f.nfa()) : validate(f.dfa());
            std::cout << "valid=" << (v.empty() ? "true" : "false") << " violations=" << v.size() << '\n';
            for (const auto& x : v) std::cout << "violation: " << describe(x) << '\n';
            return v.empty() ? kOk : kNegative;
        };
    });

    auto* check_cmd = app.add_subcommand("check-order", "check a Wheeler order");
    input(check_cmd);
    check_cmd->add_option("--order", order_text, "positions as state ids, overrides the file's order");
    check_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            const auto a = as_nfa(f);
            std::optional<WheelerOrder> ord = f.order;
            if (!order_text.empty()) {
                std::istringstream is(order_text);
                std::vector<State> perm{std::istream_iterator<State>(is), {}};
                ord = WheelerOrder(std::move(perm));
            }
            if (!ord) throw UsageError("no order given (file has no 'order:' line and --order is missing)");
            if (ord->size() != a.size()) throw UsageError("order size does not match the automaton");
            const auto v = check_wheeler(a, *ord);
            std::cout << "wheeler_order=" << (v.empty() ? "true" : "false") << " violations=" << v.size() << '\n';
            for (const auto& x : v) std::cout << "violation: " << describe(x) << '\n';
            return v.empty() ? kOk : kNegative;
        };
    });

    auto* sort_cmd = app.add_subcommand("sort", "forward algorithm and quotient");
    input(sort_cmd);
    output(sort_cmd);
    sort_cmd->callback([&] {
        action = [&] {
            const auto a = as_nfa(load(in));
            ForwardStats st;
            const auto p = forward_stable_partition(a, &st);
            auto q = quotient_sorted(a);
            const bool ok = check_wheeler(q.quotient, q.order).empty();
            records(out) << "blocks=" << p.size() << " states=" << a.size() << " quotient_wheeler=" << (ok ? "true" : "false")
                         << " iterations=" << st.outer_iterations << '\n';
            write_output(out, serialize_aut(q.quotient, ok ? std::optional{q.order} : std::nullopt));
            return ok ? kOk : kNegative;
        };
    });

    auto* det_cmd = app.add_subcommand("determinize", "interval determinization of a WNFA");
    input(det_cmd);
    output(det_cmd);
    det_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            const auto a = as_nfa(f);
            const auto d = wheeler_determinize(a, require_order(f, a));
            records(out) << "states=" << d.automaton.size()
                         << " bound=" << determinization_bound(a.size(), a.alphabet().size()) << '\n';
            write_output(out, serialize_aut(d.automaton, d.order));
            return kOk;
        };
    });

    auto* mindfa_cmd = app.add_subcommand("minimize-dfa", "minimum partial DFA");
    input(mindfa_cmd);
    output(mindfa_cmd);
    mindfa_cmd->callback([&] {
        action = [&] {
            const auto d = minimize_dfa(as_dfa(load(in)));
            records(out) << "states=" << d.size() << '\n';
            write_output(out, serialize_aut(d));
            return kOk;
        };
    });

    auto* minw_cmd = app.add_subcommand("minimize-wdfa", "merge MN-equivalent colex runs of a WDFA");
    input(minw_cmd);
    output(minw_cmd);
    minw_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            const auto a = as_nfa(f);
            const auto r = minimize_wdfa(a, require_order(f, a));
            records(out) << "states=" << r.automaton.size() << " input_states=" << a.size() << '\n';
            write_output(out, serialize_aut(r.automaton, r.order));
            return kOk;
        };
    });

    auto* from_cmd = app.add_subcommand("from-dfa", "minimum WDFA of the language of a DFA");
    input(from_cmd);
    output(from_cmd);
    from_cmd->add_option("--depth", depth, "enumeration depth (0: default bound)");
    from_cmd->add_option("--budget", budget, "maximum number of colex runs");
    from_cmd->callback([&] {
        action = [&] {
            const auto d = as_dfa(load(in));
            try {
                const auto r = min_wdfa_from_dfa_report(d, depth, std::min<std::size_t>(budget, 20'000'000));
                records(out) << "result=ok states=" << r.wdfa.automaton.size() << " depth=" << r.depth << '\n';
                write_output(out, serialize_aut(r.wdfa.automaton, r.wdfa.order));
                return kOk;
            } catch (const NotWheelerInput& e) {
                std::cout << "result=not-wheeler\n";
                return kNegative;
            } catch (const DepthExhausted& e) {
                std::cout << "result=depth-exhausted\n";
                return kNegative;
            }
        };
    });

    auto* lang_cmd = app.add_subcommand("is-wheeler-language", "decide whether L(A) is Wheeler");
    input(lang_cmd);
    lang_cmd->add_option("--budget", budget, "table entry budget");
    lang_cmd->callback([&] {
        action = [&] {
            const auto d = as_dfa(load(in));
            const auto v = decide_wheeler(d, budget);
            if (v.wheeler) {
                std::cout << "wheeler=true min_states=" << v.min_states << '\n';
                return kOk;
            }
            std::cout << "wheeler=false min_states=" << v.min_states << ' ' << witness_record(d.alphabet(), *v.witness)
                      << '\n';
            return kNegative;
        };
    });

    auto* aut_cmd = app.add_subcommand("is-wheeler-automaton", "look for a Wheeler order");
    input(aut_cmd);
    aut_cmd->add_flag("--exhaustive", exhaustive, "fall back to trying every order (at most 8 states)");
    aut_cmd->callback([&] {
        action = [&] {
            const auto a = as_nfa(load(in));
            const auto r = recognize_sort_reduced(a);
            if (r.outcome == SortOutcome::Wheeler) {
                std::cout << "wheeler=true method=forward order=" << join(r.order->perm()) << '\n';
                return kOk;
            }
            if (r.outcome == SortOutcome::NotWheeler) {
                std::cout << "wheeler=false method=forward reason=not-wheeler\n";
                return kNegative;
            }
            if (!exhaustive) {
                std::cout << "wheeler=unknown method=forward reason=not-reduced merged_blocks=" << r.merged_blocks.size()
                          << '\n';
                return kNegative;
            }
            const auto orders = oracles::exhaustive_wheeler_order(a);
            if (orders.empty()) {
                std::cout << "wheeler=false method=exhaustive orders=0\n";
                return kNegative;
            }
            std::cout << "wheeler=true method=exhaustive orders=" << orders.size()
                      << " order=" << join(orders.front().perm()) << '\n';
            return kOk;
        };
    });

    auto* op_cmd = app.add_subcommand("op", "closure operations");
    op_cmd->add_option("operation", op_name, "intersect | union-finite | concat-finite | pref | pref-minus")
        ->required()
        ->check(CLI::IsMember({"intersect", "union-finite", "concat-finite", "pref", "pref-minus"}));
    op_cmd->add_option("file", in, "input .aut file")->required();
    op_cmd->add_option("second", in2, "second input (intersect)");
    op_cmd->add_option("--word", words, "a word of the finite set (repeatable, '' is ε)");
    output(op_cmd);
    op_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            if (op_name == "pref" || op_name == "pref-minus") {
                const auto a = as_nfa(f);
                const OrderedNfa w{a, require_order(f, a)};
                const auto r = op_name == "pref" ? pref_closure(w) : pref_minus(w);
                records(out) << "states=" << r.automaton.size() << '\n';
                write_output(out, serialize_aut(r.automaton, r.order));
                return kOk;
            }
            const auto d = as_dfa(f);
            EdgeLabeledDfa r = d;
            if (op_name == "intersect") {
                if (in2.empty()) throw UsageError("intersect needs two input files");
                r = minimize_dfa(product_dfa(d, as_dfa(load(in2)), ProductMode::Intersect));
            } else if (op_name == "union-finite") {
                r = union_finite(d, parse_words(d.alphabet(), words));
            } else {
                r = concat_finite(d, parse_words(d.alphabet(), words));
            }
            records(out) << "states=" << r.size() << '\n';
            write_output(out, serialize_aut(r));
            return kOk;
        };
    });

    auto* gen_cmd = app.add_subcommand("gen", "generators");
    gen_cmd->add_option("generator", gen_name, "path | interval | lm | star | unary")
        ->required()
        ->check(CLI::IsMember({"path", "interval", "lm", "star", "unary"}));
    gen_cmd->add_option("--word", word, "path: the word; star: the starred word");
    gen_cmd->add_option("--alphabet", alphabet_text, "symbols in rank order");
    gen_cmd->add_option("--kind", kind, "interval kind")
        ->check(CLI::IsMember({"open", "closed-left", "closed-right", "closed", "left-ray", "right-ray"}));
    gen_cmd->add_option("--lo", lo, "lower endpoint");
    gen_cmd->add_option("--hi", hi, "upper endpoint");
    gen_cmd->add_option("--prefix", prefix, "star: word before the star");
    gen_cmd->add_option("--suffix", suffix, "star: word after the star");
    gen_cmd->add_option("-m", m, "lm: parameter m (1..4)");
    gen_cmd->add_option("--tail", tail, "unary: tail length");
    gen_cmd->add_option("--cycle", cycle, "unary: cycle length");
    gen_cmd->add_option("--final", finals, "unary: final states (repeatable)");
    gen_cmd->add_flag("--random", random, "unary: random lasso from --seed");
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("--states", states, "unary --random: maximum number of states");
    output(gen_cmd);
    gen_cmd->callback([&] {
        action = [&] {
            std::string text;
            if (gen_name == "path") {
                if (word.empty()) throw UsageError("gen path needs --word");
                const auto sigma = Alphabet::from_string(alphabet_text.empty() ? alphabet_of(word) : alphabet_text);
                const auto p = gen_path_automaton(sigma, sigma.parse_word(word));
                text = serialize_aut(p.automaton, p.order);
            } else if (gen_name == "interval") {
                const auto sigma = Alphabet::from_string(alphabet_text.empty() ? "ab" : alphabet_text);
                IntervalSpec spec;
                for (auto k : {IntervalKind::Open, IntervalKind::ClosedLeft, IntervalKind::ClosedRight,
                               IntervalKind::Closed, IntervalKind::LeftRay, IntervalKind::RightRay})
                    if (kind == to_string(k)) spec.kind = k;
                spec.lo = sigma.parse_word(lo);
                spec.hi = sigma.parse_word(hi);
                text = serialize_aut(gen_interval(spec, sigma));
            } else if (gen_name == "lm") {
                const auto fam = gen_Lm(m);
                text = serialize_aut(fam.dfa);
                records(out) << "dfa_states=" << fam.dfa.size() << " wdfa_states=" << fam.wdfa.automaton.size() << '\n';
            } else if (gen_name == "star") {
                if (word.empty()) throw UsageError("gen star needs --word");
                const auto sigma =
                    Alphabet::from_string(alphabet_text.empty() ? alphabet_of(prefix + word + suffix) : alphabet_text);
                text = serialize_aut(gen_star_family(sigma, sigma.parse_word(prefix), sigma.parse_word(word),
                                                     sigma.parse_word(suffix)));
            } else {
                if (random) {
                    std::mt19937_64 rng(seed);
                    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, states))(rng);
                    tail = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                    cycle = n - tail;
                    finals.clear();
                    for (State q = 0; q < n; ++q)
                        if (std::bernoulli_distribution(0.4)(rng)) finals.push_back(q);
                    if (finals.empty()) finals.push_back(static_cast<State>(n - 1));
                }
                text = serialize_aut(gen_unary(tail, cycle, finals));
            }
            write_output(out, text);
            return kOk;
        };
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force references");
    oracle_cmd->add_option("oracle", oracle_name, "enum | orders | witness")
        ->required()
        ->check(CLI::IsMember({"enum", "orders", "witness"}));
    oracle_cmd->add_option("file", in, "input .aut file")->required();
    oracle_cmd->add_option("--max-len", max_len, "length cap");
    oracle_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            if (oracle_name == "enum") {
                const auto words_out = f.state_labeled() ? oracles::enumerate_language(f.nfa(), max_len)
                                                         : oracles::enumerate_language(f.dfa(), max_len);
                const auto& sigma = f.state_labeled() ? f.nfa().alphabet() : f.dfa().alphabet();
                std::cout << "count=" << words_out.size() << '\n';
                for (const auto& w : words_out) std::cout << "word: " << sigma.format(w) << '\n';
                return kOk;
            }
            if (oracle_name == "orders") {
                const auto orders = oracles::exhaustive_wheeler_order(as_nfa(f));
                std::cout << "orders=" << orders.size() << '\n';
                for (const auto& o : orders) std::cout << "order: " << join(o.perm()) << '\n';
                return orders.empty() ? kNegative : kOk;
            }
            const auto d = minimize_dfa(as_dfa(f));
            const auto w = oracles::bounded_witness_search(d, max_len);
            if (!w) {
                std::cout << "witness=none cap=" << max_len << '\n';
                return kOk;
            }
            std::cout << "witness=found " << witness_record(d.alphabet(), *w) << '\n';
            return kNegative;
        };
    });

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output");
    input(dot_cmd);
    output(dot_cmd);
    dot_cmd->callback([&] {
        action = [&] {
            const auto f = load(in);
            write_output(out, f.state_labeled() ? export_dot(f.nfa(), f.order) : export_dot(f.dfa()));
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kUsage;
}
