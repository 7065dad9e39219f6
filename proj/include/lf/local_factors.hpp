#pragma once
// Exact unramified local L-factors.
//
// From Hecke data at a good prime (trace a_p and determinant scale) and an
// irreducible decomposition, produce the inverse local factor polynomial in
// X = p^{-s}.  The construction is the companion-matrix functor: with
// C the companion matrix of x^2 - trace x + scale, the factor of a
// constituent sym^j (x) det^k is det(I - X sym^j(C) det(C)^k), expanded via
// the matrix identities tr sym^j(C^m) = h_j(tr C^m, det C^m) and Newton's
// identities.  No root extraction ever occurs.

#include <complex>
#include <stdexcept>
#include <vector>

#include "lf/char_ring.hpp"
#include "lf/numeric.hpp"

namespace lf {

struct PrimeMismatch : std::runtime_error {
    explicit PrimeMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct OverflowPolicy : std::runtime_error {
    explicit OverflowPolicy(const std::string& w) : std::runtime_error(w) {}
};

// Hecke data at a good prime: a_p and the scale alpha_p beta_p
// (p^{k-1} for a holomorphic weight-k trivial-character form; 1 for
// unitary-normalized input).
struct HeckeLocal {
    long long p = 2;
    ArithmeticMode mode = ArithmeticMode::EXACT;
    bigrat trace_q;  // EXACT
    bigrat scale_q;
    real trace_f{};  // FLOAT
    real scale_f{};

    static HeckeLocal exact(long long p, bigrat trace, bigrat scale);
    static HeckeLocal floating(long long p, real trace, real scale);
};

// Inverse local factor sum c_i X^i, c_0 = 1; degree = dimension of the
// decomposition that produced it.  EXACT factors carry rational
// coefficients (integers unless negative det powers or balancing are
// involved); FLOAT factors carry complex high-precision coefficients.
struct LocalFactorPoly {
    long long p = 2;
    ArithmeticMode mode = ArithmeticMode::EXACT;
    std::vector<bigrat> qcoeffs;
    std::vector<cplx> fcoeffs;

    int degree() const {
        return static_cast<int>(
                   (mode == ArithmeticMode::EXACT ? qcoeffs.size() : fcoeffs.size())) - 1;
    }
    // Coefficients as complex values regardless of mode.
    std::vector<cplx> as_complex() const;
};

LocalFactorPoly mul(const LocalFactorPoly& a, const LocalFactorPoly& b);

// Local factor of a single-factor decomposition.
LocalFactorPoly local_factor(const HeckeLocal& h, const IrredDecomp& d);

// Rankin-Selberg pairing factor of a two-factor decomposition.
LocalFactorPoly rs_pairing_factor(const HeckeLocal& h1, const HeckeLocal& h2,
                                  const IrredDecomp& d);

// ---------------------------------------------------------------------------
// Dihedral (induced) local data.

enum class Splitting { SPLIT, INERT, RAMIFIED };

// Local behavior of an induced character at p: SPLIT carries the two values
// at the primes above p, INERT and RAMIFIED carry one.
struct SplittingType {
    Splitting kind = Splitting::SPLIT;
    cplx chi1{1};  // value at the (first) prime above p
    cplx chi2{1};  // second value; SPLIT only

    static SplittingType split(cplx a, cplx b) { return {Splitting::SPLIT, a, b}; }
    static SplittingType inert(cplx a) { return {Splitting::INERT, a, 0}; }
    static SplittingType ramified(cplx a) { return {Splitting::RAMIFIED, a, 0}; }
};

// SPLIT: (1-chi1 X)(1-chi2 X); INERT: 1-chi(P) X^2; RAMIFIED: 1-chi(P) X
// (degree drop; bad-prime surrogate used only in symbolic identity checks).
LocalFactorPoly induced_local_factor(const SplittingType& s, long long p);

// ---------------------------------------------------------------------------
// Polynomial algebra on complex inverse factors (power-sum transforms);
// used by the dihedral symbolic checker.  All polynomials have c_0 = 1.

// Power sums p_1..p_n of the inverse roots of the factor.
std::vector<cplx> power_sums(const std::vector<cplx>& poly, int n);
// Reconstruct a factor of the given degree from power sums.
std::vector<cplx> from_power_sums(const std::vector<cplx>& ps, int degree);
// Tensor (Rankin-Selberg) of two factors: power sums multiply.
std::vector<cplx> tensor_factor(const std::vector<cplx>& a, const std::vector<cplx>& b);
// sym^2 / alt^2 of a factor.
std::vector<cplx> sym2_factor(const std::vector<cplx>& a);
std::vector<cplx> alt2_factor(const std::vector<cplx>& a);
std::vector<cplx> mul_factors(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Exact power sums of the inverse roots of a rational-coefficient factor.
std::vector<bigrat> power_sums_exact(const std::vector<bigrat>& poly, int n);

// Power sums of the inverse roots of a decomposition's factor, computed
// straight from the trace recurrences without expanding the polynomial
// (cheap when only a few are needed).  h2 is ignored for one-factor
// decompositions.
std::vector<bigrat> decomp_power_sums_exact(const IrredDecomp& d, const HeckeLocal& h1,
                                            const HeckeLocal& h2, int n);

}  // namespace lf
