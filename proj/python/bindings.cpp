#include <algorithm>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace wheeler;

// Automata cross the boundary as .aut text; words as strings over the alphabet.

namespace {

const Alphabet& alphabet_of(const AutFile& f) { return f.state_labeled() ? f.nfa().alphabet() : f.dfa().alphabet(); }

EdgeLabeledDfa as_dfa(const AutFile& f) {
    if (!f.state_labeled()) return f.dfa();
    if (f.nfa().is_deterministic()) return state_to_edge_labeled(f.nfa());
    return oracles::subset_construct(f.nfa());
}

StateLabeledNfa as_nfa(const AutFile& f) { return f.state_labeled() ? f.nfa() : edge_to_state_labeled(f.dfa()); }

WheelerOrder order_of(const AutFile& f, const StateLabeledNfa& a) {
    if (f.state_labeled() && f.order) return *f.order;
    const auto r = recognize_sort_reduced(a);
    if (r.outcome != SortOutcome::Wheeler) throw UsageError("no order given and the forward algorithm found none");
    return *r.order;
}

py::dict verdict(const WheelerVerdict& v, const Alphabet& s) {
    py::dict d;
    d["wheeler"] = v.wheeler;
    d["min_states"] = v.min_states;
    if (v.witness) {
        py::dict w;
        w["u"] = v.witness->u;
        w["v"] = v.witness->v;
        w["mu"] = s.format(v.witness->mu);
        w["nu"] = s.format(v.witness->nu);
        w["gamma"] = s.format(v.witness->gamma);
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

IntervalKind kind_from(const std::string& name) {
    for (auto k : {IntervalKind::Open, IntervalKind::ClosedLeft, IntervalKind::ClosedRight, IntervalKind::Closed,
                   IntervalKind::LeftRay, IntervalKind::RightRay})
        if (name == to_string(k)) return k;
    throw UsageError("unknown interval kind '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_wheeler, m) {
    m.doc() = "Wheeler automata and Wheeler languages";

    auto base = py::register_exception<Error>(m, "WheelerError");
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<NotWheelerInput>(m, "NotWheelerInput", base.ptr());
    py::register_exception<DepthExhausted>(m, "DepthExhausted", base.ptr());

    m.def("colex_compare", [](const std::string& alphabet, const std::string& a, const std::string& b) {
        const auto s = Alphabet::from_string(alphabet);
        const auto o = colex_compare(s.parse_word(a), s.parse_word(b));
        return o == Ordering3::Less ? -1 : o == Ordering3::Equal ? 0 : 1;
    }, py::arg("alphabet"), py::arg("a"), py::arg("b"), "-1, 0 or 1");

    m.def("canonicalize", [](const std::string& text) { return serialize_aut(parse_aut(text)); }, py::arg("aut"));

    m.def("validate", [](const std::string& text) {
        const auto f = parse_aut(text);
        std::vector<std::string> out;
        for (const auto& v : f.state_labeled() ? validate(f.nfa()) : validate(f.dfa())) out.push_back(describe(v));
        return out;
    }, py::arg("aut"), "structural violations, empty when valid");

    m.def("check_order", [](const std::string& text, std::optional<std::vector<State>> order) {
        const auto f = parse_aut(text);
        const auto a = as_nfa(f);
        const WheelerOrder ord = order ? WheelerOrder(*order) : f.order ? *f.order : throw UsageError("no order given");
        std::vector<std::string> out;
        for (const auto& v : check_wheeler(a, ord)) out.push_back(describe(v));
        return out;
    }, py::arg("aut"), py::arg("order") = py::none(), "Wheeler axiom violations, empty when the order is valid");

    m.def("accepts", [](const std::string& text, const std::string& word) {
        const auto f = parse_aut(text);
        const auto w = alphabet_of(f).try_parse_word(word);
        if (!w) return false;
        return f.state_labeled() ? accepts(f.nfa(), *w) : accepts(f.dfa(), *w);
    }, py::arg("aut"), py::arg("word"));

    m.def("regex", [](const std::string& alphabet, const std::string& pattern) {
        return serialize_aut(regex_dfa(Alphabet::from_string(alphabet), pattern));
    }, py::arg("alphabet"), py::arg("pattern"), "minimum DFA of a regular expression");

    m.def("is_wheeler_language", [](const std::string& text, std::size_t budget) {
        const auto f = parse_aut(text);
        const auto d = as_dfa(f);
        return verdict(decide_wheeler(d, budget), d.alphabet());
    }, py::arg("aut"), py::arg("budget") = 200'000'000);

    m.def("sort", [](const std::string& text) {
        const auto q = quotient_sorted(as_nfa(parse_aut(text)));
        const bool ok = check_wheeler(q.quotient, q.order).empty();
        return py::make_tuple(serialize_aut(q.quotient, ok ? std::optional{q.order} : std::nullopt), ok);
    }, py::arg("aut"), "forward algorithm quotient and whether its block order is Wheeler");

    m.def("determinize", [](const std::string& text) {
        const auto f = parse_aut(text);
        const auto a = as_nfa(f);
        const auto d = wheeler_determinize(a, order_of(f, a));
        return serialize_aut(d.automaton, d.order);
    }, py::arg("aut"));

    m.def("minimize_dfa", [](const std::string& text) { return serialize_aut(minimize_dfa(as_dfa(parse_aut(text)))); },
          py::arg("aut"));

    m.def("minimize_wdfa", [](const std::string& text) {
        const auto f = parse_aut(text);
        const auto a = as_nfa(f);
        const auto r = minimize_wdfa(a, order_of(f, a));
        return serialize_aut(r.automaton, r.order);
    }, py::arg("aut"));

    m.def("min_wdfa_from_dfa", [](const std::string& text, std::size_t depth) {
        const auto r = min_wdfa_from_dfa(as_dfa(parse_aut(text)), depth);
        return serialize_aut(r.automaton, r.order);
    }, py::arg("aut"), py::arg("depth") = 0);

    m.def("enumerate_language", [](const std::string& text, std::size_t max_len) {
        const auto f = parse_aut(text);
        const auto ws = f.state_labeled() ? oracles::enumerate_language(f.nfa(), max_len)
                                          : oracles::enumerate_language(f.dfa(), max_len);
        std::vector<std::string> out;
        for (const auto& w : ws) out.push_back(alphabet_of(f).format(w));
        return out;
    }, py::arg("aut"), py::arg("max_len"), "accepted words up to max_len, colex sorted");

    m.def("wheeler_orders", [](const std::string& text) {
        std::vector<std::vector<State>> out;
        for (const auto& o : oracles::exhaustive_wheeler_order(as_nfa(parse_aut(text)))) out.push_back(o.perm());
        return out;
    }, py::arg("aut"), "every Wheeler order, by brute force (at most 8 states)");

    m.def("gen_path", [](const std::string& word, const std::string& alphabet) {
        const auto s = Alphabet::from_string(alphabet);
        const auto p = gen_path_automaton(s, s.parse_word(word));
        return serialize_aut(p.automaton, p.order);
    }, py::arg("word"), py::arg("alphabet"));

    m.def("gen_lm", [](std::size_t mm) {
        const auto fam = gen_Lm(mm);
        return py::make_tuple(serialize_aut(fam.dfa), serialize_aut(fam.wdfa.automaton, fam.wdfa.order));
    }, py::arg("m"), "(dfa, wdfa) for L_m");

    m.def("gen_interval", [](const std::string& kind, const std::string& lo, const std::string& hi,
                             const std::string& alphabet) {
        const auto s = Alphabet::from_string(alphabet);
        return serialize_aut(gen_interval({kind_from(kind), s.parse_word(lo), s.parse_word(hi)}, s));
    }, py::arg("kind"), py::arg("lo"), py::arg("hi"), py::arg("alphabet") = "ab");

    m.def("gen_star", [](const std::string& prefix, const std::string& word, const std::string& suffix,
                         const std::string& alphabet) {
        const auto s = Alphabet::from_string(alphabet);
        return serialize_aut(gen_star_family(s, s.parse_word(prefix), s.parse_word(word), s.parse_word(suffix)));
    }, py::arg("prefix"), py::arg("word"), py::arg("suffix"), py::arg("alphabet"));

    m.def("is_primitive", [](const std::string& word) {
        std::string sym = word;
        std::sort(sym.begin(), sym.end());
        sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
        return is_primitive(Alphabet::from_string(sym).parse_word(word));
    }, py::arg("word"));

    m.def("export_dot", [](const std::string& text) {
        const auto f = parse_aut(text);
        return f.state_labeled() ? export_dot(f.nfa(), f.order) : export_dot(f.dfa());
    }, py::arg("aut"));
}
