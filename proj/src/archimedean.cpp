#include "lf/archimedean.hpp"

#include <algorithm>

#include <boost/math/special_functions/bernoulli.hpp>

namespace lf {

// ---------------------------------------------------------------------------
// log Gamma

cplx100 log_gamma(const cplx100& z) {
    cplx100 w = z;
    cplx100 shift(0);
    while (w.real() < 60) {
        shift += log(w);
        w += 1;
    }
    static const real100 half = real100(1) / 2;
    static const real100 log2pi = log(2 * pi_const100());
    cplx100 res = (w - half) * log(w) - w + half * log2pi;
    cplx100 zpow = w;  // w^{2n-1}
    cplx100 w2 = w * w;
    for (unsigned n = 1; n <= 30; ++n) {
        real100 b = boost::math::bernoulli_b2n<real100>(n);
        res += b / (real100(2 * n) * real100(2 * n - 1) * zpow);
        zpow *= w2;
    }
    return res - shift;
}

cplx log_gamma50(const cplx& z) {
    // Native 50-digit evaluation; the shift target 35 with 30 Stirling terms
    // leaves a method error well below the working precision.
    cplx w = z;
    cplx shift(0);
    while (w.real() < 35) {
        shift += log(w);
        w += 1;
    }
    static const real half = real(1) / 2;
    static const real log2pi = log(2 * pi_const());
    cplx res = (w - half) * log(w) - w + half * log2pi;
    cplx zpow = w;  // w^{2n-1}
    cplx w2 = w * w;
    for (unsigned n = 1; n <= 30; ++n) {
        real b = boost::math::bernoulli_b2n<real>(n);
        res += b / (real(2 * n) * real(2 * n - 1) * zpow);
        zpow *= w2;
    }
    return res - shift;
}

real log_abs_gamma(const cplx& z) { return log_gamma50(z).real(); }

// ---------------------------------------------------------------------------
// Infinity types

real InfinityType::lambda() const {
    real s(0);
    for (const auto& b : shifts) s += abs(b);
    return s;
}

bool InfinityType::conjugation_closed(const real& tol) const {
    std::vector<bool> used(shifts.size(), false);
    for (size_t i = 0; i < shifts.size(); ++i) {
        cplx want = conj(shifts[i]);
        bool found = false;
        for (size_t j = 0; j < shifts.size(); ++j) {
            if (used[j]) continue;
            if (abs(shifts[j] - want) < tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

InfinityType infinity_type_holomorphic(int k) {
    if (k < 1) throw std::invalid_argument("infinity_type_holomorphic: weight must be >= 1");
    InfinityType t;
    t.shifts = {cplx(real(k - 1) / 2), cplx(real(k + 1) / 2)};
    return t;
}

InfinityType infinity_type_maass(const real& t, int parity) {
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("infinity_type_maass: parity must be 0 or 1");
    InfinityType r;
    r.shifts = {cplx(real(parity), t), cplx(real(parity), -t)};
    return r;
}

InfinityType functorial_infinity(const std::vector<InfinityType>& bases,
                                 const IrredDecomp& d) {
    if (static_cast<int>(bases.size()) != d.factors)
        throw std::invalid_argument("functorial_infinity: one base per factor required");
    for (const auto& b : bases)
        if (b.degree() != 2)
            throw std::invalid_argument("functorial_infinity: bases must have degree 2");
    InfinityType out;
    for (const auto& part : d.parts) {
        for (long long m = 0; m < part.mult; ++m)
            for (int i = 0; i <= part.j; ++i) {
                cplx s1 = cplx(part.j - i + part.k) * bases[0].shifts[0] +
                          cplx(i + part.k) * bases[0].shifts[1];
                if (d.factors == 1) {
                    out.shifts.push_back(s1);
                    continue;
                }
                for (int i2 = 0; i2 <= part.j2; ++i2) {
                    cplx s2 = cplx(part.j2 - i2 + part.k2) * bases[1].shifts[0] +
                              cplx(i2 + part.k2) * bases[1].shifts[1];
                    out.shifts.push_back(s1 + s2);
                }
            }
    }
    return out;
}

InfinityType holomorphic_sym_infinity(int k, int j_sym) {
    if (j_sym < 0 || j_sym % 2 != 0)
        throw std::invalid_argument("holomorphic_sym_infinity: even symmetric power required");
    InfinityType out;
    int m = j_sym / 2;
    for (int j = 1; j <= m; ++j) {
        // Gamma_C(s + j(k-1)) = Gamma_R(s + j(k-1)) Gamma_R(s + j(k-1) + 1)
        out.shifts.push_back(cplx(j * (k - 1)));
        out.shifts.push_back(cplx(j * (k - 1) + 1));
    }
    out.shifts.push_back(cplx((m * (k - 1)) % 2));
    std::sort(out.shifts.begin(), out.shifts.end(),
              [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
    return out;
}

// ---------------------------------------------------------------------------
// Quantitative helpers

real c_of_pi(const real& t) {
    const real& pi = pi_const();
    real closed = 1 / (cosh(2 * pi * t) * cosh(pi * t) * cosh(pi * t));
    real direct = exp(-3 * log(pi) + 2 * log_abs_gamma(cplx(real(1) / 2, 2 * t)) +
                      4 * log_abs_gamma(cplx(real(1) / 2, t)));
    real rel = abs(closed - direct) / closed;
    if (rel > real("1e-12"))
        throw DisagreementError("c_of_pi: evaluation paths diverge, relative " +
                                rel.str(6));
    return closed;
}

real thickened_conductor(long long N, const InfinityType& inf) {
    if (N < 1) throw std::invalid_argument("thickened_conductor: N must be >= 1");
    return real(N) * (2 + inf.lambda());
}

real zero_region_width(const real& N_pair, const real& D_F, const real& t,
                       const real& lambda, int deg) {
    return log(N_pair) + 4 * log(D_F) + 4 * deg * log(2 + abs(t) + lambda);
}

real stirling_ratio_check(const real& t) {
    real num = log_abs_gamma(cplx(real(1), t));
    real den = log_abs_gamma(cplx(real(-1) / 2, t));
    real ratio = exp(num - den) / pow(t, real(3) / 2);
    return abs(ratio - 1);
}

real spectral_a11(const real& norm_sq) {
    if (!(norm_sq > 0)) throw NonPositiveNorm("spectral_a11: norm must be positive");
    return 1 / sqrt(norm_sq);
}

}  // namespace lf
