#include "wheeler/alphabet.hpp"

#include <cctype>

#include "wheeler/error.hpp"

namespace wheeler {

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw UsageError("alphabet must not be empty");
    index_.fill(-2);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isgraph(c) || c == '#')
            throw UsageError(std::string("invalid alphabet symbol '") + symbols_[i] + "'");
        if (index_[c] != -2) throw UsageError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        index_[c] = static_cast<Symbol>(i);
    }
}

Alphabet Alphabet::from_string(std::string_view symbols) {
    return Alphabet(std::vector<char>(symbols.begin(), symbols.end()));
}

std::optional<Symbol> Alphabet::rank(char c) const noexcept {
    const Symbol r = index_[static_cast<unsigned char>(c)];
    if (r < 0) return std::nullopt;
    return r;
}

char Alphabet::symbol(Symbol s) const {
    if (s == kHash) return '#';
    if (!contains(s)) throw UsageError("symbol rank " + std::to_string(s) + " outside alphabet");
    return symbols_[static_cast<std::size_t>(s)];
}

std::optional<Word> Alphabet::try_parse_word(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        auto r = rank(c);
        if (!r) return std::nullopt;
        w.push_back(*r);
    }
    return w;
}

Word Alphabet::parse_word(std::string_view text) const {
    auto w = try_parse_word(text);
    if (!w) throw UsageError("word '" + std::string(text) + "' uses symbols outside alphabet '" + to_string() + "'");
    return *w;
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(symbol(s));
    return out;
}

Ordering3 colex_compare(const Word& a, const Word& b) noexcept {
    auto i = a.size();
    auto j = b.size();
    while (i > 0 && j > 0) {
        --i;
        --j;
        if (a[i] < b[j]) return Ordering3::Less;
        if (a[i] > b[j]) return Ordering3::Greater;
    }
    if (i == 0 && j == 0) return Ordering3::Equal;
    return i == 0 ? Ordering3::Less : Ordering3::Greater;
}

Ordering3 colex_compare(const Alphabet& alphabet, const Word& a, const Word& b) {
    for (const Word* w : {&a, &b})
        for (Symbol s : *w)
            if (s != kHash && !alphabet.contains(s))
                throw UsageError("word contains rank " + std::to_string(s) + " not in alphabet '" +
                                 alphabet.to_string() + "'");
    return colex_compare(a, b);
}

const char* to_string(Ordering3 o) noexcept {
    switch (o) {
        case Ordering3::Less: return "Less";
        case Ordering3::Equal: return "Equal";
        case Ordering3::Greater: return "Greater";
    }
    return "?";
}

}  // namespace wheeler
