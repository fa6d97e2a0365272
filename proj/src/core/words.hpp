#ifndef SHUFL_CORE_WORDS_HPP
#define SHUFL_CORE_WORDS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shufl {

/// The two-letter alphabet of the word algebra. The total order x0 < x1
/// is fixed; it underlies the canonical (shortlex) ordering of words.
enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };

constexpr char letter_char(Letter l) { return l == Letter::x0 ? '0' : '1'; }

/// A finite word over {x0, x1}. Immutable after construction; the empty
/// word is the multiplicative unit of the shuffle algebra.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    /// Parses the text syntax: a string of '0'/'1' characters ("" = empty word).
    /// Throws std::invalid_argument on any other character.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter at(std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }

    Word prefix(std::size_t count) const;
    Word suffix_from(std::size_t start) const;

    std::size_t count(Letter l) const;

    /// Word concatenation.
    friend Word operator+(const Word& a, const Word& b);

    /// True iff nonempty, begins with x0 and ends with x1 (the words that
    /// carry a convergent zeta image).
    bool admissible() const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    /// Canonical order: shorter words first, ties broken lexicographically
    /// with x0 < x1.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Letter> letters_;
};

/// Builds the power word l^n.
Word power(Letter l, std::size_t n);

/// One maximal run of a single letter.
struct Block {
    Letter letter;
    std::size_t exponent;  // >= 1
    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;
};

/// Run-length encoding of a word: maximal runs, adjacent blocks carry
/// distinct letters.
using BlockWord = std::vector<Block>;

BlockWord to_blocks(const Word& w);
/// Inverse of to_blocks. Throws std::invalid_argument if two adjacent
/// blocks carry the same letter or a block has exponent 0.
Word from_blocks(const BlockWord& b);

/// Exponent tuple (s_1,...,s_k) of positive integers; the argument of a
/// multiple zeta value. Admissible iff s_1 >= 2.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    /// Parses comma-separated positive integers, e.g. "3,1,2".
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::size_t depth() const { return parts_.size(); }
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    std::string str() const;

    bool operator==(const Composition&) const = default;
    /// Lexicographic order on the part sequences.
    auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
};

/// Reads off (s_1,...,s_k) from x0^{s_1-1} x1 ... x0^{s_k-1} x1.
/// Defined on every nonempty word ending in x1 (s_1 = 1 is allowed at the
/// data level). Throws std::invalid_argument otherwise.
Composition word_to_composition(const Word& w);

/// Inverse of word_to_composition on its image.
Word composition_to_word(const Composition& c);

}  // namespace shufl

#endif
