#include "core/lincomb.hpp"

namespace shufl {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

LinComb LinComb::single(Word w, BigInt coeff) {
    LinComb out;
    if (coeff != 0) out.terms_.emplace(std::move(w), std::move(coeff));
    return out;
}

BigInt LinComb::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LinComb::mass() const {
    BigInt sum = 0;
    for (const auto& [w, c] : terms_) sum += c;
    return sum;
}

void LinComb::add_term(const Word& w, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

LinComb& LinComb::operator*=(const BigInt& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scale;
    return *this;
}

std::string LinComb::tsv() const {
    std::string out;
    for (const auto& [w, c] : terms_) {
        out += c.get_str();
        out.push_back('\t');
        out += w.str();
        out.push_back('\n');
    }
    return out;
}

LinComb concat(const LinComb& p, const Word& mid, const LinComb& q) {
    LinComb out;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) out.add_term(u + mid + v, cu * cv);
    return out;
}

std::vector<TermDiff> diff(const LinComb& p, const LinComb& q) {
    std::vector<TermDiff> out;
    auto pi = p.terms().begin();
    auto qi = q.terms().begin();
    while (pi != p.terms().end() || qi != q.terms().end()) {
        if (qi == q.terms().end() || (pi != p.terms().end() && pi->first < qi->first)) {
            out.push_back({pi->first, pi->second, 0});
            ++pi;
        } else if (pi == p.terms().end() || qi->first < pi->first) {
            out.push_back({qi->first, 0, qi->second});
            ++qi;
        } else {
            if (pi->second != qi->second) out.push_back({pi->first, pi->second, qi->second});
            ++pi;
            ++qi;
        }
    }
    return out;
}

BigInt ZetaExpansion::mass() const {
    BigInt sum = 0;
    for (const auto& [c, v] : terms_) sum += v;
    return sum;
}

void ZetaExpansion::add_term(const Composition& c, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ZetaExpansion& ZetaExpansion::operator+=(const ZetaExpansion& other) {
    for (const auto& [c, v] : other.terms_) add_term(c, v);
    return *this;
}

std::string ZetaExpansion::tsv() const {
    std::string out;
    for (const auto& [c, v] : terms_) {
        out += v.get_str();
        out.push_back('\t');
        out += c.str();
        out.push_back('\n');
    }
    return out;
}

ZetaExpansion zeta_image(const LinComb& p) {
    ZetaExpansion out;
    for (const auto& [w, c] : p.terms()) out.add_term(word_to_composition(w), c);
    return out;
}

std::vector<ZetaTermDiff> diff(const ZetaExpansion& p, const ZetaExpansion& q) {
    std::vector<ZetaTermDiff> out;
    auto pi = p.terms().begin();
    auto qi = q.terms().begin();
    while (pi != p.terms().end() || qi != q.terms().end()) {
        if (qi == q.terms().end() || (pi != p.terms().end() && pi->first < qi->first)) {
            out.push_back({pi->first, pi->second, 0});
            ++pi;
        } else if (pi == p.terms().end() || qi->first < pi->first) {
            out.push_back({qi->first, 0, qi->second});
            ++qi;
        } else {
            if (pi->second != qi->second) out.push_back({pi->first, pi->second, qi->second});
            ++pi;
            ++qi;
        }
    }
    return out;
}

}  // namespace shufl
