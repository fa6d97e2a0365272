#include "core/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace shufl {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == '0') {
            letters.push_back(Letter::x0);
        } else if (c == '1') {
            letters.push_back(Letter::x1);
        } else {
            throw std::invalid_argument("word syntax: expected only '0'/'1', got '" +
                                        std::string(1, c) + "'");
        }
    }
    return Word(std::move(letters));
}

Word Word::prefix(std::size_t count) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + count));
}

Word Word::suffix_from(std::size_t start) const {
    return Word(std::vector<Letter>(letters_.begin() + start, letters_.end()));
}

std::size_t Word::count(Letter l) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

bool Word::admissible() const {
    return !empty() && letters_.front() == Letter::x0 && letters_.back() == Letter::x1;
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (Letter l : letters_) out.push_back(letter_char(l));
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return letters_ <=> other.letters_;
}

Word power(Letter l, std::size_t n) {
    return Word(std::vector<Letter>(n, l));
}

BlockWord to_blocks(const Word& w) {
    BlockWord blocks;
    for (Letter l : w.letters()) {
        if (!blocks.empty() && blocks.back().letter == l) {
            ++blocks.back().exponent;
        } else {
            blocks.push_back({l, 1});
        }
    }
    return blocks;
}

Word from_blocks(const BlockWord& b) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].exponent == 0) throw std::invalid_argument("block with zero exponent");
        if (i > 0 && b[i].letter == b[i - 1].letter)
            throw std::invalid_argument("adjacent blocks with equal letter");
        letters.insert(letters.end(), b[i].exponent, b[i].letter);
    }
    return Word(std::move(letters));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must be nonempty");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("composition syntax: expected digit");
        long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw std::invalid_argument("composition part too large");
            ++i;
        }
        parts.push_back(static_cast<int>(value));
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("composition syntax: expected ','");
            ++i;
            if (i == text.size()) throw std::invalid_argument("composition syntax: trailing ','");
        }
    }
    return Composition(std::move(parts));
}

int Composition::weight() const {
    int sum = 0;
    for (int p : parts_) sum += p;
    return sum;
}

std::string Composition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(parts_[i]);
    }
    return out;
}

Composition word_to_composition(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no composition image");
    if (w.letters().back() != Letter::x1)
        throw std::invalid_argument("word ends in x0: no composition image");
    std::vector<int> parts;
    int zeros = 0;
    for (Letter l : w.letters()) {
        if (l == Letter::x0) {
            ++zeros;
        } else {
            parts.push_back(zeros + 1);
            zeros = 0;
        }
    }
    return Composition(std::move(parts));
}

Word composition_to_word(const Composition& c) {
    std::vector<Letter> letters;
    for (int p : c.parts()) {
        letters.insert(letters.end(), static_cast<std::size_t>(p - 1), Letter::x0);
        letters.push_back(Letter::x1);
    }
    return Word(std::move(letters));
}

}  // namespace shufl
