#ifndef SHUFL_CORE_LINCOMB_HPP
#define SHUFL_CORE_LINCOMB_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "core/words.hpp"

namespace shufl {

/// Exact coefficient type. Every coefficient in scope is an integer
/// (products and sums of binomials), so no rational arithmetic is needed.
using BigInt = mpz_class;

/// C(n, k) as a BigInt; 0 when k > n or either argument is negative.
BigInt binomial(long n, long k);

/// A formal integer-linear combination of words: the working element of
/// the shuffle algebra. Zero coefficients are never stored, and terms are
/// kept in canonical (shortlex) word order, so serialization is stable.
class LinComb {
public:
    using Terms = std::map<Word, BigInt>;

    LinComb() = default;
    static LinComb unit() { return single(Word{}); }
    static LinComb single(Word w, BigInt coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of w (zero if absent).
    BigInt coeff(const Word& w) const;

    /// Sum of all coefficients; for a product a III b this equals
    /// C(|a|+|b|, |a|).
    BigInt mass() const;

    void add_term(const Word& w, const BigInt& coeff);

    LinComb& operator+=(const LinComb& other);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    LinComb& operator*=(const BigInt& scale);
    friend LinComb operator*(const BigInt& scale, LinComb p) { return p *= scale; }

    bool operator==(const LinComb&) const = default;

    /// Lines "coeff<TAB>word", canonical order.
    std::string tsv() const;

private:
    Terms terms_;
};

/// Bilinear concatenation: sum of coeff_p(u) * coeff_q(v) on u . mid . v.
LinComb concat(const LinComb& p, const Word& mid, const LinComb& q);

/// One differing term of two combinations, with both coefficients.
struct TermDiff {
    Word word;
    BigInt lhs;
    BigInt rhs;
};

/// Counterexample certificate: all terms on which p and q disagree, in
/// canonical order. Empty iff p == q.
std::vector<TermDiff> diff(const LinComb& p, const LinComb& q);

/// A formal integer-linear combination of compositions: the zeta-side
/// image of a LinComb. Terms are kept in lexicographic composition order.
class ZetaExpansion {
public:
    using Terms = std::map<Composition, BigInt>;

    ZetaExpansion() = default;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    BigInt mass() const;

    void add_term(const Composition& c, const BigInt& coeff);

    ZetaExpansion& operator+=(const ZetaExpansion& other);

    bool operator==(const ZetaExpansion&) const = default;

    /// Lines "coeff<TAB>composition", lexicographic order.
    std::string tsv() const;

private:
    Terms terms_;
};

/// Termwise word_to_composition image, aggregating equal compositions.
/// Every word in p must end in x1.
ZetaExpansion zeta_image(const LinComb& p);

struct ZetaTermDiff {
    Composition composition;
    BigInt lhs;
    BigInt rhs;
};

std::vector<ZetaTermDiff> diff(const ZetaExpansion& p, const ZetaExpansion& q);

}  // namespace shufl

#endif
