#pragma once
// Exact virtual-character calculus for one or two GL(2) torus factors.
//
// A character is a finite multiset of integer weight vectors with integer
// multiplicities.  Weights are stored as 4-tuples (a,b,a2,b2); single-factor
// characters keep (a2,b2) = (0,0).  Every stored character is Weyl-invariant:
// symmetric under swapping the exponents within each factor.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

using Weight = std::array<int, 4>;

struct NotEffective : std::runtime_error {
    explicit NotEffective(const std::string& what) : std::runtime_error(what) {}
};

class CharPoly {
public:
    CharPoly() : factors_(1) {}
    // Builds from raw terms; drops zero entries and checks Weyl invariance.
    CharPoly(int factors, std::map<Weight, long long> terms);

    int factors() const { return factors_; }
    const std::map<Weight, long long>& terms() const { return terms_; }

    // Total dimension (sum of multiplicities); meaningful for effective chars.
    long long dim() const;

    bool operator==(const CharPoly& o) const {
        return factors_ == o.factors_ && terms_ == o.terms_;
    }

    CharPoly& add(const CharPoly& o, long long scale = 1);

private:
    int factors_;
    std::map<Weight, long long> terms_;
};

// One irreducible constituent sym^j (x) det^k, externally tensored with
// sym^{j2} (x) det^{k2} when two factors are present.
struct IrredPart {
    int j = 0;
    int k = 0;
    int j2 = 0;
    int k2 = 0;
    long long mult = 1;

    friend bool operator==(const IrredPart& a, const IrredPart& b) {
        return a.j == b.j && a.k == b.k && a.j2 == b.j2 && a.k2 == b.k2 &&
               a.mult == b.mult;
    }
    friend bool operator<(const IrredPart& a, const IrredPart& b) {
        return std::array<long long, 5>{a.j, a.k, a.j2, a.k2, a.mult} <
               std::array<long long, 5>{b.j, b.k, b.j2, b.k2, b.mult};
    }
};

struct IrredDecomp {
    int factors = 1;
    std::vector<IrredPart> parts;  // sorted lexicographically, unique

    long long dim() const;
    bool operator==(const IrredDecomp& o) const {
        return factors == o.factors && parts == o.parts;
    }
};

// Character of sym^j (x) det^k placed in the chosen torus factor: weights
// a^{j-i+k} b^{i+k}, i = 0..j, each with multiplicity 1.
CharPoly irreducible_char(int j, int k, int factor_index = 1);

// Pointwise convolution of weight multisets.  A 1-factor character may be
// promoted to act trivially on the other factor; promotion happens
// automatically when exactly one argument has two factors.
CharPoly tensor_chars(const CharPoly& x, const CharPoly& y);

// Promote a 1-factor character into the given slot of a 2-factor character.
CharPoly promote(const CharPoly& x, int factor_index);

enum class Plethysm { SYM2, ALT2 };

// SYM2: weights w_i + w_j over unordered pairs i <= j; ALT2: over i < j.
// Rejects 2-factor input.
CharPoly plethysm(const CharPoly& x, Plethysm kind);

// Greedy highest-weight peeling.  Throws NotEffective when any multiplicity
// goes negative (the input was virtual, not effective).
IrredDecomp decompose(const CharPoly& x);

// Reassembles the character of a decomposition (inverse of decompose).
CharPoly char_of(const IrredDecomp& d);

}  // namespace lf
