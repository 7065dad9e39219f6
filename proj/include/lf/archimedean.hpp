#pragma once
// Archimedean bookkeeping: gamma-factor parameter multisets (shifts b_j of
// prod Gamma_R(s + b_j), Gamma_R(s) = pi^{-s/2} Gamma(s/2)), functorial
// constructions on them, the closed-form spectral constant c(t), thickened
// conductors, zero-free-region widths, Stirling-ratio diagnostics, and the
// spectral a(1,1) normalization.  Also houses the high-precision complex
// log-gamma used throughout the analytic code.

#include <stdexcept>
#include <vector>

#include "lf/char_ring.hpp"
#include "lf/numeric.hpp"

namespace lf {

struct DisagreementError : std::runtime_error {
    explicit DisagreementError(const std::string& w) : std::runtime_error(w) {}
};
struct NonPositiveNorm : std::runtime_error {
    explicit NonPositiveNorm(const std::string& w) : std::runtime_error(w) {}
};

struct InfinityType {
    std::vector<cplx> shifts;

    int degree() const { return static_cast<int>(shifts.size()); }
    real lambda() const;  // sum of |b_j|, recomputed on demand
    bool conjugation_closed(const real& tol = real("1e-30")) const;
};

// Holomorphic weight k: {(k-1)/2, (k+1)/2}  (Gamma_C(s + (k-1)/2) split into
// two Gamma_R factors).
InfinityType infinity_type_holomorphic(int k);

// Maass form with spectral parameter t and parity delta: {delta + it, delta - it}.
InfinityType infinity_type_maass(const real& t, int parity);

// Applies a decomposition to GL(2) parameter pairs additively on weights:
// the part sym^j det^k contributes (j-i+k) mu_1 + (i+k) mu_2 for i = 0..j
// (pairwise sums across factors for two-factor decompositions).  Exact for
// spectral (Maass) parameters.
InfinityType functorial_infinity(const std::vector<InfinityType>& bases,
                                 const IrredDecomp& d);

// Analytic gamma shifts of the balanced even symmetric power sym^{2m} of a
// holomorphic weight-k form: Gamma_C(s + j(k-1)) for j = 1..m together with
// Gamma_R(s + (m(k-1) mod 2)).  (The additive weight rule above is exact for
// spectral parameters but not for discrete-series ones; this is the
// discrete-series counterpart.)
InfinityType holomorphic_sym_infinity(int k, int j_sym);

// Closed-form archimedean constant 1/(cosh(2 pi t) cosh^2(pi t)), asserted
// against the direct evaluation pi^{-3} |Gamma(1/2+2it)|^2 |Gamma(1/2+it)|^4
// to 1e-12 relative.
real c_of_pi(const real& t);

// M = N (2 + sum |b_j|).
real thickened_conductor(long long N, const InfinityType& inf);

// log[N_pair D_F^4 (2 + |t| + Lambda)^{4N}].
real zero_region_width(const real& N_pair, const real& D_F, const real& t,
                       const real& lambda, int deg);

// | |Gamma(1+it)/Gamma(-1/2+it)| / t^{3/2} - 1 |.
real stirling_ratio_check(const real& t);

// |a(1,1)| = norm_sq^{-1/2}.
real spectral_a11(const real& norm_sq);

// ---------------------------------------------------------------------------
// Gamma machinery (argument-shift + Stirling series, ~70 correct digits).
// Returns a branch of log Gamma(z); the real part (hence |Gamma|) is always
// principal.  z must not be a pole.
cplx100 log_gamma(const cplx100& z);
cplx log_gamma50(const cplx& z);
real log_abs_gamma(const cplx& z);  // log |Gamma(z)|

}  // namespace lf
