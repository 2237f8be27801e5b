#pragma once

#include <string>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/error.hpp"
#include "wheeler/minimal_wdfa.hpp"
#include "wheeler/regular.hpp"

namespace fx {

using namespace wheeler;

Word word(const Alphabet& sigma, const std::string& text);
std::vector<Word> words(const Alphabet& sigma, const std::vector<std::string>& texts);
std::string show(const Alphabet& sigma, const Word& w);

// ax*b | zx*d, states # a b d x x z left to right.
OrderedNfa exw();
EdgeLabeledDfa exw_dfa();

// Left automaton of the figure whose b-states cannot be ordered: # a a b b.
StateLabeledNfa fig_non_wheeler();

// # a a a with the loop on the middle state; only the last state is final.
StateLabeledNfa fig_out_neq_a();

// # a1 a2, edges (0,1) (0,2) (1,1), finals {1,2}; its Wheeler order puts a2 before a1.
OrderedNfa det_example();

EdgeLabeledDfa re(const std::string& alphabet, const std::string& pattern);

// Every word over sigma of length <= max_len, shortlex.
std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len);

// Brute-force membership comparison up to max_len.
bool same_language(const EdgeLabeledDfa& a, const EdgeLabeledDfa& b, std::size_t max_len);
bool same_language(const StateLabeledNfa& a, const EdgeLabeledDfa& b, std::size_t max_len);

}  // namespace fx

namespace fx {
// Every alphabet symbol labels some state.
bool covers_alphabet(const wheeler::StateLabeledNfa& a);
}  // namespace fx
