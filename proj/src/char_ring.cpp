#include "lf/char_ring.hpp"

#include <algorithm>

namespace lf {

namespace {

Weight swapped(const Weight& w, int factor) {
    Weight r = w;
    if (factor == 1) std::swap(r[0], r[1]);
    else std::swap(r[2], r[3]);
    return r;
}

}  // namespace

CharPoly::CharPoly(int factors, std::map<Weight, long long> terms)
    : factors_(factors), terms_(std::move(terms)) {
    if (factors_ != 1 && factors_ != 2)
        throw std::invalid_argument("CharPoly: factor count must be 1 or 2");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else {
            if (factors_ == 1 && (it->first[2] != 0 || it->first[3] != 0))
                throw std::invalid_argument(
                    "CharPoly: 1-factor character with nonzero second-factor weight");
            ++it;
        }
    }
    for (const auto& [w, m] : terms_) {
        for (int f = 1; f <= factors_; ++f) {
            auto it = terms_.find(swapped(w, f));
            if (it == terms_.end() || it->second != m)
                throw std::invalid_argument(
                    "CharPoly: not Weyl-invariant (asymmetric weight multiset)");
        }
    }
}

long long CharPoly::dim() const {
    long long d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
}

CharPoly& CharPoly::add(const CharPoly& o, long long scale) {
    if (factors_ != o.factors_)
        throw std::invalid_argument("CharPoly::add: factor count mismatch");
    for (const auto& [w, m] : o.terms_) {
        long long& v = terms_[w];
        v += scale * m;
        if (v == 0) terms_.erase(w);
    }
    return *this;
}

long long IrredDecomp::dim() const {
    long long d = 0;
    for (const auto& p : parts)
        d += p.mult * static_cast<long long>(p.j + 1) * (p.j2 + 1);
    return d;
}

CharPoly irreducible_char(int j, int k, int factor_index) {
    if (j < 0) throw std::invalid_argument("irreducible_char: j must be >= 0");
    if (factor_index != 1 && factor_index != 2)
        throw std::invalid_argument("irreducible_char: factor_index must be 1 or 2");
    std::map<Weight, long long> t;
    for (int i = 0; i <= j; ++i) {
        Weight w{0, 0, 0, 0};
        int a = j - i + k, b = i + k;
        if (factor_index == 1) { w[0] = a; w[1] = b; }
        else { w[2] = a; w[3] = b; }
        t[w] += 1;
    }
    return CharPoly(factor_index == 2 ? 2 : 1, std::move(t));
}

CharPoly promote(const CharPoly& x, int factor_index) {
    if (x.factors() == 2) return x;
    if (factor_index != 1 && factor_index != 2)
        throw std::invalid_argument("promote: factor_index must be 1 or 2");
    std::map<Weight, long long> t;
    for (const auto& [w, m] : x.terms()) {
        Weight v{0, 0, 0, 0};
        if (factor_index == 1) { v[0] = w[0]; v[1] = w[1]; }
        else { v[2] = w[0]; v[3] = w[1]; }
        t[v] = m;
    }
    return CharPoly(2, std::move(t));
}

CharPoly tensor_chars(const CharPoly& x, const CharPoly& y) {
    const CharPoly* a = &x;
    const CharPoly* b = &y;
    CharPoly pa, pb;
    if (x.factors() != y.factors()) {
        if (x.factors() == 1) { pa = promote(x, 1); a = &pa; }
        if (y.factors() == 1) { pb = promote(y, 1); b = &pb; }
    }
    std::map<Weight, long long> t;
    for (const auto& [wa, ma] : a->terms())
        for (const auto& [wb, mb] : b->terms()) {
            Weight w{wa[0] + wb[0], wa[1] + wb[1], wa[2] + wb[2], wa[3] + wb[3]};
            t[w] += ma * mb;
        }
    return CharPoly(a->factors(), std::move(t));
}

CharPoly plethysm(const CharPoly& x, Plethysm kind) {
    if (x.factors() != 1)
        throw std::invalid_argument("plethysm: only single-factor input supported");
    // Expand the multiset of weights, then sum over pairs.
    std::vector<Weight> ws;
    for (const auto& [w, m] : x.terms()) {
        if (m < 0)
            throw NotEffective("plethysm: negative multiplicity in input");
        for (long long r = 0; r < m; ++r) ws.push_back(w);
    }
    std::map<Weight, long long> t;
    for (size_t i = 0; i < ws.size(); ++i) {
        size_t j0 = (kind == Plethysm::SYM2) ? i : i + 1;
        for (size_t j = j0; j < ws.size(); ++j) {
            Weight w{ws[i][0] + ws[j][0], ws[i][1] + ws[j][1], 0, 0};
            t[w] += 1;
        }
    }
    return CharPoly(1, std::move(t));
}

IrredDecomp decompose(const CharPoly& x) {
    IrredDecomp d;
    d.factors = x.factors();
    std::map<Weight, long long> rem = x.terms();
    for (const auto& [w, m] : rem)
        if (m < 0) throw NotEffective("decompose: negative multiplicity in input");
    while (!rem.empty()) {
        // Lexicographically highest weight; Weyl invariance makes it dominant.
        auto hi = std::prev(rem.end());
        Weight w = hi->first;
        long long m = hi->second;
        if (m < 0) throw NotEffective("decompose: peeling produced negative multiplicity");
        IrredPart p;
        p.j = w[0] - w[1];
        p.k = w[1];
        p.j2 = w[2] - w[3];
        p.k2 = w[3];
        p.mult = m;
        if (p.j < 0 || p.j2 < 0)
            throw NotEffective("decompose: highest weight is not dominant");
        CharPoly piece = (d.factors == 2)
            ? tensor_chars(promote(irreducible_char(p.j, p.k, 1), 1),
                           irreducible_char(p.j2, p.k2, 2))
            : irreducible_char(p.j, p.k, 1);
        for (const auto& [pw, pm] : piece.terms()) {
            long long& v = rem[pw];
            v -= m * pm;
            if (v == 0) rem.erase(pw);
            else if (v < 0)
                throw NotEffective("decompose: peeling produced negative multiplicity");
        }
        d.parts.push_back(p);
    }
    std::sort(d.parts.begin(), d.parts.end());
    return d;
}

CharPoly char_of(const IrredDecomp& d) {
    CharPoly acc;
    bool first = true;
    for (const auto& p : d.parts) {
        CharPoly piece = (d.factors == 2)
            ? tensor_chars(promote(irreducible_char(p.j, p.k, 1), 1),
                           irreducible_char(p.j2, p.k2, 2))
            : irreducible_char(p.j, p.k, 1);
        if (first) {
            std::map<Weight, long long> t;
            for (const auto& [w, m] : piece.terms()) t[w] = m * p.mult;
            acc = CharPoly(d.factors, std::move(t));
            first = false;
        } else {
            acc.add(piece, p.mult);
        }
    }
    if (first) {
        acc = CharPoly(d.factors, {});
    }
    return acc;
}

}  // namespace lf
