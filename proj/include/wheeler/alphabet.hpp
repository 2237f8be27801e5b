#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wheeler {

/// Symbols are ranks into an Alphabet. Characters only show up in I/O.
using Symbol = std::int32_t;
using Word = std::vector<Symbol>;

/// Rank of the start marker `#`. Below every alphabet symbol.
inline constexpr Symbol kHash = -1;

enum class Ordering3 { Less, Equal, Greater };

/// Ordered set of single-character symbols; listing order is the rank order.
class Alphabet {
public:
    explicit Alphabet(std::vector<char> symbols);
    /// "abc" -> {a < b < c}
    static Alphabet from_string(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<char>& symbols() const noexcept { return symbols_; }

    bool contains(Symbol s) const noexcept { return s >= 0 && static_cast<std::size_t>(s) < symbols_.size(); }
    std::optional<Symbol> rank(char c) const noexcept;
    /// Character for a rank; kHash maps to '#'.
    char symbol(Symbol s) const;

    /// Throws UsageError on characters outside the alphabet.
    Word parse_word(std::string_view text) const;
    std::optional<Word> try_parse_word(std::string_view text) const;
    std::string format(const Word& w) const;
    std::string to_string() const { return std::string(symbols_.begin(), symbols_.end()); }

    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

private:
    std::vector<char> symbols_;
    std::array<Symbol, 256> index_{};
};

/// Co-lexicographic comparison: read from the right, a proper suffix comes first.
Ordering3 colex_compare(const Word& a, const Word& b) noexcept;

/// Same, but rejects ranks that are not valid for `alphabet` (kHash is allowed).
Ordering3 colex_compare(const Alphabet& alphabet, const Word& a, const Word& b);

inline bool colex_less(const Word& a, const Word& b) noexcept {
    return colex_compare(a, b) == Ordering3::Less;
}

struct ColexLess {
    bool operator()(const Word& a, const Word& b) const noexcept { return colex_less(a, b); }
};

const char* to_string(Ordering3 o) noexcept;

}  // namespace wheeler
