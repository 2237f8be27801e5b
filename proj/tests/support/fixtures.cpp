#include "fixtures.hpp"

#include <algorithm>

namespace fx {

Word word(const Alphabet& sigma, const std::string& text) { return sigma.parse_word(text); }

std::vector<Word> words(const Alphabet& sigma, const std::vector<std::string>& texts) {
    std::vector<Word> out;
    for (const auto& t : texts) out.push_back(sigma.parse_word(t));
    return out;
}

std::string show(const Alphabet& sigma, const Word& w) { return w.empty() ? "ε" : sigma.format(w); }

OrderedNfa exw() {
    const Alphabet sigma = Alphabet::from_string("abdxz");
    const Symbol a = 0, b = 1, d = 2, x = 3, z = 4;
    StateLabeledNfa nfa(sigma, {kHash, a, b, d, x, x, z},
                        {{0, 1}, {0, 6}, {1, 2}, {1, 4}, {4, 2}, {4, 4}, {5, 3}, {5, 5}, {6, 3}, {6, 5}},
                        {2, 3});
    return {nfa, WheelerOrder::identity(7)};
}

EdgeLabeledDfa exw_dfa() { return re("abdxz", "ax*b|zx*d"); }

StateLabeledNfa fig_non_wheeler() {
    return StateLabeledNfa(Alphabet::from_string("ab"), {kHash, 0, 0, 1, 1},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {3, 4});
}

StateLabeledNfa fig_out_neq_a() {
    return StateLabeledNfa(Alphabet::from_string("a"), {kHash, 0, 0, 0},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 2}, {2, 3}}, {3});
}

OrderedNfa det_example() {
    StateLabeledNfa nfa(Alphabet::from_string("a"), {kHash, 0, 0}, {{0, 1}, {0, 2}, {1, 1}}, {1, 2});
    return {nfa, WheelerOrder({0, 2, 1})};
}

EdgeLabeledDfa re(const std::string& alphabet, const std::string& pattern) {
    return regex_dfa(Alphabet::from_string(alphabet), pattern);
}

std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len) {
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (Symbol s = 0; s < static_cast<Symbol>(sigma.size()); ++s) {
            Word w = out[i];
            w.push_back(s);
            out.push_back(std::move(w));
        }
    }
    return out;
}

bool same_language(const EdgeLabeledDfa& a, const EdgeLabeledDfa& b, std::size_t max_len) {
    for (const Word& w : all_words(a.alphabet(), max_len))
        if (accepts(a, w) != accepts(b, w)) return false;
    return true;
}

bool same_language(const StateLabeledNfa& a, const EdgeLabeledDfa& b, std::size_t max_len) {
    for (const Word& w : all_words(a.alphabet(), max_len))
        if (accepts(a, w) != accepts(b, w)) return false;
    return true;
}

}  // namespace fx

namespace fx {
bool covers_alphabet(const StateLabeledNfa& a) {
    std::vector<bool> seen(a.alphabet().size());
    for (State q = 1; q < a.size(); ++q) seen[static_cast<std::size_t>(a.label(q))] = true;
    return std::find(seen.begin(), seen.end(), false) == seen.end();
}
}  // namespace fx
