#pragma once
// Numerical evaluation of completed self-dual L-functions on the real axis,
// real-zero scanning, zero-count bounds, residues at s = 1, and the residue
// lower-bound check, plus the Euler-Maclaurin and class-number oracles.
//
// Evaluation method: for each atom (one completed L-function with its gamma
// factor) the pole-killed entire function
//     Lambda_ent(s) = [s(s-1)]^r N^{s/2} gamma(s) L(s)
// satisfies Lambda_ent(s) = J(s) + W J(1-s) with
//     J(tau) = (1/2 pi i) \int_{Re z = L} G(z) L(z) dz / (z - tau),
// G(z) = [z(z-1)]^r N^{z/2} gamma(z).  The integrand is precomputed once per
// atom on a fixed line (trapezoidal quadrature, truncated Dirichlet series),
// after which each evaluation costs one pass over the quadrature nodes.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lf/archimedean.hpp"
#include "lf/global_series.hpp"

namespace lf {

struct AccuracyUnreachable : std::runtime_error {
    explicit AccuracyUnreachable(const std::string& w) : std::runtime_error(w) {}
};
struct NotSelfDual : std::runtime_error {
    explicit NotSelfDual(const std::string& w) : std::runtime_error(w) {}
};
struct PositivityUnverified : std::runtime_error {
    explicit PositivityUnverified(const std::string& w) : std::runtime_error(w) {}
};
struct PrerequisiteFailed : std::runtime_error {
    std::string which;  // "positivity" or "zero-freeness"
    PrerequisiteFailed(const std::string& which_, const std::string& w)
        : std::runtime_error(w), which(which_) {}
};

// ---------------------------------------------------------------------------
// Euler-Maclaurin reference evaluations (degree-1 oracles).

// zeta(s, a) for s != 1, a > 0.
real hurwitz_zeta_em(const real& s, const real& a);
real riemann_zeta_em(const real& s);
// L(s, chi_D) via q^{-s} sum_a chi(a) zeta(s, a/q).
real dirichlet_l_em(long long D, const real& s);

// ---------------------------------------------------------------------------
// Completed functions.

struct CompletedAtom {
    std::string name;
    LSeriesSpec spec;     // finite part (Euler product)
    InfinityType inf;     // gamma shifts b_j
    long long conductor = 1;
    int pole_order = 0;   // 0 or 1
    int root_number = 1;  // +1 or -1
};

class CompletedSpec {
public:
    CompletedSpec();
    explicit CompletedSpec(std::string name);

    CompletedSpec& add(CompletedAtom atom, int exponent = 1);

    const std::string& name() const;
    bool self_dual() const;
    const std::vector<std::pair<CompletedAtom, int>>& atoms() const;
    int pole_order() const;       // total
    int root_number() const;      // product
    long long conductor() const;  // product
    InfinityType total_infinity() const;
    real thickened_conductor_value() const;  // N (2 + Lambda)

    // The pole-killed completed value prod_atoms Lambda_ent^exp; real for
    // self-dual data.
    real lambda_ent(const real& s) const;
    // The finite part L(s) (s away from s = 0, 1 when poles are present).
    real finite_value(const real& s) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Finite-part builders over the weight-12 level-1 form (exact coefficients).
LSeriesSpec sym_power_spec(int j);      // balanced sym^j, j even >= 2
LSeriesSpec sym2_pairing_spec();        // degree-9 pairing Euler product
LSeriesSpec pi_pairing_product_spec();  // zeta^3 sym2^6 sym4^6 sym6^3 sym8

// Standard completed specs over the weight-12 form.
CompletedSpec completed_zeta();
CompletedSpec completed_character(long long D);  // L(s, chi_D), D fundamental
CompletedSpec completed_zeta_times_character(long long D);
CompletedSpec completed_sym_power(int j);  // balanced sym^j of the weight-12 form
// L(s, sym^2 x sym^2) as a single degree-9 Euler product with the combined
// gamma factor (pole order 1).
CompletedSpec completed_sym2_pairing();
// Pi x Pi for Pi = 1 + sym^2 + sym^4, assembled from its constituents
// zeta^3 sym2^6 sym4^6 sym6^3 sym8 (pole order 3).
CompletedSpec completed_pi_pairing();

// Guarded evaluation: checks self-duality flags and 0 < s <= 2.
real evaluate_completed(const CompletedSpec& cs, const real& s);

// ---------------------------------------------------------------------------
// Scanning.

struct ScanConfig {
    real a = real(1) / 2;
    real b = real("0.999");
    int grid = 1000;
    real bisect_tol = real("1e-9");
    real target = real("1e-8");
    real c = real("0.1");  // the Def-1.5 constant
};

struct ZeroBracket {
    real lo, hi, zero;
    bool resolved = true;  // false when the zero is within tolerance of s = 1
};

struct ScanPoint {
    real s;
    real value;
    bool bracket = false;  // sign change against the next grid point
};

struct ScanResult {
    std::vector<ScanPoint> points;
    std::vector<ZeroBracket> zeros;
    std::string csv() const;   // columns: s, lambda, bracket
    std::string text() const;
};

ScanResult scan_real_zeros(const CompletedSpec& cs, const ScanConfig& cfg);

struct ZeroCountResult {
    int count = 0;
    int r = 0;
    bool pass = false;
    real lo, hi;
    real log_m;
    std::string text() const;
};

// Counts scan zeros in (1 - c/log M, 1); requires a nonnegative positivity
// report for the spec's expanded coefficients (PositivityUnverified when the
// report is absent or negative).
ZeroCountResult zero_count_bound(const CompletedSpec& cs,
                                 const std::optional<PositivityReport>& pos,
                                 const ScanConfig& cfg);

// Residue of the finite part at s = 1 (pole order must be 1): Richardson
// extrapolation of (s-1) L(s) over s = 1 + h 2^{-j}.
real residue_at_one(const CompletedSpec& cs);

struct SiegelCheck {
    real residue;
    real threshold;  // c / log M
    bool pass = false;
    real max_passing_c;
    std::string text() const;
};

SiegelCheck siegel_lower_bound_check(const CompletedSpec& cs,
                                     const PositivityReport& pos,
                                     const ScanConfig& cfg);

// ---------------------------------------------------------------------------
// Class-number oracle: h(D) by reduced-form enumeration, returns
// 2 pi h / (w sqrt(|D|)).
long long class_number(long long D);
real class_number_oracle(long long D);

}  // namespace lf
