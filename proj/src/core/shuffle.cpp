#include "core/shuffle.hpp"

#include <algorithm>
#include <utility>

namespace shufl {

namespace {

void check_cap(std::size_t m, std::size_t n, std::uint64_t cap) {
    BigInt mass = binomial(static_cast<long>(m + n), static_cast<long>(m));
    if (mass > BigInt(static_cast<unsigned long>(cap)))
        throw CapExceeded("shuffle of lengths " + std::to_string(m) + "+" + std::to_string(n) +
                          " has " + mass.get_str() + " interleavings, above cap " +
                          std::to_string(cap));
}

// Full shuffle by recursion; empty factors are the unit, otherwise pivot
// at the first letter of u.
LinComb shuffle_rec(const Word& u, const Word& v);

LinComb pivot_terms(const Word& a, const Word& b, std::size_t k) {
    const std::size_t n = b.size();
    const Word a_left = a.prefix(k - 1);
    const Word a_right = a.suffix_from(k);
    const Word pivot_letter{a.at(k - 1)};
    LinComb total;
    for (std::size_t i = 0; i <= n; ++i) {
        LinComb left = shuffle_rec(a_left, b.prefix(i));
        LinComb right = shuffle_rec(a_right, b.suffix_from(i));
        total += concat(left, pivot_letter, right);
    }
    return total;
}

LinComb shuffle_rec(const Word& u, const Word& v) {
    if (u.empty()) return LinComb::single(v);
    if (v.empty()) return LinComb::single(u);
    return pivot_terms(u, v, 1);
}

using BlockKey = std::pair<BlockWord, BlockWord>;

BlockWord drop_first_letter(const BlockWord& w) {
    BlockWord out(w.begin() + (w.front().exponent == 1 ? 1 : 0), w.end());
    if (w.front().exponent > 1) out.front().exponent = w.front().exponent - 1;
    return out;
}

LinComb blocks_rec(const BlockWord& y, const BlockWord& z,
                   std::map<BlockKey, LinComb>& memo) {
    if (y.empty()) return LinComb::single(from_blocks(z));
    if (z.empty()) return LinComb::single(from_blocks(y));
    if (y.size() == 1 && z.size() == 1 && y.front().letter == z.front().letter) {
        // equal-letter powers collapse to one binomial-weighted term
        const std::size_t m = y.front().exponent, n = z.front().exponent;
        return LinComb::single(power(y.front().letter, m + n),
                               binomial(static_cast<long>(m + n), static_cast<long>(m)));
    }

    BlockKey key = z < y ? BlockKey{z, y} : BlockKey{y, z};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const BlockWord& a = key.first;
    const BlockWord& b = key.second;

    // split at the last letter of a's first block: the prefix a1^{m1-1}
    // shuffles into every cut of b, the tail blocks shuffle into the rest
    const Word head_letter{a.front().letter};
    const BlockWord a_head = a.front().exponent > 1
                                 ? BlockWord{{a.front().letter, a.front().exponent - 1}}
                                 : BlockWord{};
    const BlockWord a_tail(a.begin() + 1, a.end());

    LinComb total = concat(LinComb::single(power(a.front().letter, a.front().exponent)), Word{},
                           blocks_rec(a_tail, b, memo));
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t taken = 1; taken <= b[j].exponent; ++taken) {
            BlockWord b_pre(b.begin(), b.begin() + j);
            b_pre.push_back({b[j].letter, taken});
            BlockWord b_suf;
            if (taken < b[j].exponent) b_suf.push_back({b[j].letter, b[j].exponent - taken});
            b_suf.insert(b_suf.end(), b.begin() + j + 1, b.end());
            total += concat(blocks_rec(a_head, b_pre, memo), head_letter,
                            blocks_rec(a_tail, b_suf, memo));
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

LinComb shuffle_brute(const Word& a, const Word& b, std::uint64_t cap) {
    const std::size_t m = a.size(), n = b.size();
    check_cap(m, n, cap);
    if (m == 0) return LinComb::single(b);
    if (n == 0) return LinComb::single(a);

    // mask[i] == 1 means slot i takes the next letter of a
    std::vector<unsigned char> mask(m + n, 0);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(m), mask.end(), 1);
    std::sort(mask.begin(), mask.end());

    LinComb out;
    std::vector<Letter> buf(m + n);
    do {
        std::size_t ia = 0, ib = 0;
        for (std::size_t i = 0; i < m + n; ++i)
            buf[i] = mask[i] ? a.at(ia++) : b.at(ib++);
        out.add_term(Word(buf), 1);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

LinComb shuffle_pivot(const Word& a, const Word& b, std::size_t pivot) {
    if (a.empty()) throw std::invalid_argument("shuffle_pivot: first word must be nonempty");
    if (pivot < 1 || pivot > a.size())
        throw std::invalid_argument("shuffle_pivot: pivot " + std::to_string(pivot) +
                                    " out of range [1, " + std::to_string(a.size()) + "]");
    return pivot_terms(a, b, pivot);
}

LinComb shuffle_blocks(const BlockWord& a, const BlockWord& b, std::uint64_t cap) {
    std::size_t m = 0, n = 0;
    for (const Block& blk : a) m += blk.exponent;
    for (const Block& blk : b) n += blk.exponent;
    check_cap(m, n, cap);
    std::map<BlockKey, LinComb> memo;
    return blocks_rec(a, b, memo);
}

}  // namespace shufl
