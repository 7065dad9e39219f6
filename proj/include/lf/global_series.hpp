#pragma once
// Global (good-prime) L-series assembly: specs built from forms, characters
// and irreducible decompositions; Dirichlet-coefficient expansion; exact
// local identity verification; positivity and logarithmic-derivative checks;
// and a registry of named identities (with annotations for lines where the
// published form needs a correction).

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lf/char_ring.hpp"
#include "lf/forms_data.hpp"
#include "lf/local_factors.hpp"

namespace lf {

// A source of Hecke data at good primes.
struct FormRef {
    enum class Kind { HOLOMORPHIC, MAASS };
    Kind kind = Kind::HOLOMORPHIC;
    std::shared_ptr<const NewformQExpansion> hol;
    std::shared_ptr<const MaassFormData> maass;
    bool unitary = false;  // divide by p^{(k-1)/2}: FLOAT mode

    static FormRef holomorphic(std::shared_ptr<const NewformQExpansion> f,
                               bool unitary = false);
    static FormRef maass_form(std::shared_ptr<const MaassFormData> m);
    HeckeLocal local(long long p) const;
    ArithmeticMode mode() const;
};

// One Euler-factor pattern: either a degree-1 quadratic-character factor
// (D = 1 gives zeta), a single-form decomposition, or a two-form pairing.
struct SpecFactor {
    std::optional<QuadraticCharacter> character;
    std::optional<FormRef> f1;
    std::optional<FormRef> f2;  // pairing slot; requires decomp.factors == 2
    IrredDecomp decomp;
    int exponent = 1;

    int degree() const;
    LocalFactorPoly local(long long p) const;  // without the exponent
};

struct LSeriesSpec {
    std::string name;
    std::vector<SpecFactor> factors;
    std::set<long long> excluded;  // bad primes, skipped everywhere
    bool self_dual = true;
    long long conductor = 1;
    std::optional<cplx> root_number;

    int degree() const;
    ArithmeticMode mode() const;
    // Inverse local factor at a good prime (product over factors/exponents).
    LocalFactorPoly local(long long p) const;
};

// Convenience builders.
IrredDecomp sym_decomp(int j, int k = 0);
IrredDecomp balanced_sym_decomp(int j);          // sym^j (x) det^{-j/2}
IrredDecomp pairing_decomp(int j1, int k1, int j2, int k2);
LSeriesSpec zeta_spec();
LSeriesSpec character_spec(long long D);
LSeriesSpec product_spec(std::string name, const std::vector<LSeriesSpec>& parts);

struct DirichletCoeffs {
    ArithmeticMode mode = ArithmeticMode::EXACT;
    std::vector<bigrat> qvalues;  // EXACT: a_1..a_X
    std::vector<real> fvalues;    // FLOAT

    long long size() const {
        return static_cast<long long>(mode == ArithmeticMode::EXACT ? qvalues.size()
                                                                    : fvalues.size());
    }
    real value_f(long long n) const;
};

DirichletCoeffs expand_coeffs(const LSeriesSpec& spec, long long X);

// Dirichlet convolution; used as the product/convolution consistency oracle.
DirichletCoeffs convolve(const DirichletCoeffs& a, const DirichletCoeffs& b);

struct PrimeCheck {
    std::string label;      // "p=7" or a dihedral case label
    bool match = true;
    int coeff_index = -1;   // first differing coefficient
    std::string lhs, rhs;   // stringified differing values
};

struct IdentityReport {
    std::string tag;
    std::string annotation;
    std::vector<PrimeCheck> checks;

    bool all_match() const;
    std::string serialize() const;
};

// Compares exact inverse-factor polynomials of both sides at each good prime
// in [pmin, pmax].  Mismatch is a result, not an error.
IdentityReport verify_local_identity(const LSeriesSpec& lhs, const LSeriesSpec& rhs,
                                     long long pmin, long long pmax,
                                     const std::string& tag = "");

struct PositivityReport {
    bool nonnegative = true;
    long long first_violation = 0;  // index n of the first negative coefficient
    std::string value;
    std::string serialize() const;
};
PositivityReport positivity_report(const DirichletCoeffs& c);

// Coefficients of -L'/L as a Dirichlet series: log(p) * (power sum of the
// inverse local roots) at n = p^m, zero elsewhere.
std::vector<real> log_deriv_coeffs(const LSeriesSpec& spec, long long X);
// The exact power sums themselves (EXACT mode), for sign checks.
std::vector<bigrat> local_log_deriv_power_sums(const LSeriesSpec& spec, long long p,
                                               int count);

// ---------------------------------------------------------------------------
// Identity registry.  Each entry names a verifiable factorization; entries
// whose published form needs a correction carry both the printed and the
// corrected variant (tag suffix "c") with an annotation.

struct RegistryEntry {
    std::string tag;
    std::string description;
    std::string annotation;   // nonempty for printed-typo entries
    bool expect_match = true;
    std::function<IdentityReport()> run;
};

const std::vector<RegistryEntry>& identity_registry();
const RegistryEntry& registry_entry(const std::string& tag);

}  // namespace lf
