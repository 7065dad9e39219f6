#include "lf/local_factors.hpp"

namespace lf {

namespace {

// tr sym^j(M) for a 2x2 matrix with trace u and determinant v:
// h_0 = 1, h_1 = u, h_i = u h_{i-1} - v h_{i-2}.
template <class S>
S sym_trace(int j, const S& u, const S& v) {
    if (j == 0) return S(1);
    S hm2(1), hm1 = u;
    for (int i = 2; i <= j; ++i) {
        S h = u * hm1 - v * hm2;
        hm2 = hm1;
        hm1 = h;
    }
    return hm1;
}

template <class S>
S int_pow(const S& base, long long e) {
    if (e < 0) return S(1) / int_pow(base, -e);
    S r(1), b = base;
    long long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Newton's identities: elementary symmetric functions from power sums.
template <class S>
std::vector<S> newton_elementary(const std::vector<S>& ps, int degree) {
    std::vector<S> e(degree + 1, S(0));
    e[0] = S(1);
    for (int i = 1; i <= degree; ++i) {
        S acc(0);
        for (int m = 1; m <= i; ++m) {
            S term = e[i - m] * ps[m - 1];
            if (m % 2 == 0) acc -= term;
            else acc += term;
        }
        e[i] = acc / i;
    }
    return e;
}

// Inverse factor coefficients c_i = (-1)^i e_i from the power sums of the
// inverse roots.
template <class S>
std::vector<S> factor_from_power_sums(const std::vector<S>& ps, int degree) {
    auto e = newton_elementary(ps, degree);
    std::vector<S> c(degree + 1);
    for (int i = 0; i <= degree; ++i) c[i] = (i % 2 == 0) ? e[i] : -e[i];
    return c;
}

// Power sums of the inverse roots of a part sym^j det^k (x) sym^{j2} det^{k2}
// on Hecke data (trace, scale) per factor.  p_m = h_j(t_m, s^m) s^{mk} x
// (second factor alike), with t_m = tr(C^m) from the linear recurrence.
template <class S>
std::vector<S> part_power_sums(const IrredPart& part, int nfactors,
                               const S& tr1, const S& sc1,
                               const S& tr2, const S& sc2, int n) {
    std::vector<S> ps(n);
    // t_m recurrence state per factor.
    S t1m2(2), t1m1 = tr1, t2m2(2), t2m1 = tr2;
    S s1m(1), s2m(1);
    for (int m = 1; m <= n; ++m) {
        S t1, t2;
        if (m == 1) { t1 = tr1; t2 = tr2; }
        else {
            t1 = tr1 * t1m1 - sc1 * t1m2;
            t1m2 = t1m1; t1m1 = t1;
            t2 = tr2 * t2m1 - sc2 * t2m2;
            t2m2 = t2m1; t2m1 = t2;
        }
        s1m *= sc1;
        s2m *= sc2;
        S v = sym_trace(part.j, t1, s1m) * int_pow(s1m, part.k);
        if (nfactors == 2)
            v *= sym_trace(part.j2, t2, s2m) * int_pow(s2m, part.k2);
        ps[m - 1] = v;
    }
    return ps;
}

template <class S>
std::vector<S> decomp_factor(const IrredDecomp& d, const S& tr1, const S& sc1,
                             const S& tr2, const S& sc2) {
    std::vector<S> acc{S(1)};
    for (const auto& part : d.parts) {
        int deg = (part.j + 1) * (part.j2 + 1);
        auto ps = part_power_sums(part, d.factors, tr1, sc1, tr2, sc2, deg);
        auto f = factor_from_power_sums(ps, deg);
        for (long long r = 0; r < part.mult; ++r) {
            std::vector<S> prod(acc.size() + f.size() - 1, S(0));
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) prod[i + j] += acc[i] * f[j];
            acc = std::move(prod);
        }
    }
    return acc;
}

}  // namespace

HeckeLocal HeckeLocal::exact(long long p, bigrat trace, bigrat scale) {
    if (scale == 0) throw std::invalid_argument("HeckeLocal: scale must be nonzero");
    HeckeLocal h;
    h.p = p;
    h.mode = ArithmeticMode::EXACT;
    h.trace_q = std::move(trace);
    h.scale_q = std::move(scale);
    return h;
}

HeckeLocal HeckeLocal::floating(long long p, real trace, real scale) {
    if (scale == 0) throw std::invalid_argument("HeckeLocal: scale must be nonzero");
    HeckeLocal h;
    h.p = p;
    h.mode = ArithmeticMode::FLOAT;
    h.trace_f = std::move(trace);
    h.scale_f = std::move(scale);
    return h;
}

std::vector<cplx> LocalFactorPoly::as_complex() const {
    if (mode == ArithmeticMode::FLOAT) return fcoeffs;
    std::vector<cplx> c;
    c.reserve(qcoeffs.size());
    for (const auto& q : qcoeffs) {
        real num(numerator(q).str());
        real den(denominator(q).str());
        c.emplace_back(num / den);
    }
    return c;
}

LocalFactorPoly mul(const LocalFactorPoly& a, const LocalFactorPoly& b) {
    if (a.p != b.p) throw PrimeMismatch("mul: local factors at different primes");
    LocalFactorPoly r;
    r.p = a.p;
    if (a.mode == ArithmeticMode::EXACT && b.mode == ArithmeticMode::EXACT) {
        r.mode = ArithmeticMode::EXACT;
        r.qcoeffs.assign(a.qcoeffs.size() + b.qcoeffs.size() - 1, bigrat(0));
        for (size_t i = 0; i < a.qcoeffs.size(); ++i)
            for (size_t j = 0; j < b.qcoeffs.size(); ++j)
                r.qcoeffs[i + j] += a.qcoeffs[i] * b.qcoeffs[j];
    } else {
        r.mode = ArithmeticMode::FLOAT;
        auto ca = a.as_complex(), cb = b.as_complex();
        r.fcoeffs = mul_factors(ca, cb);
    }
    return r;
}

LocalFactorPoly local_factor(const HeckeLocal& h, const IrredDecomp& d) {
    if (d.factors != 1)
        throw std::invalid_argument(
            "local_factor: two-factor decomposition needs a pair of Hecke data");
    LocalFactorPoly r;
    r.p = h.p;
    r.mode = h.mode;
    if (h.mode == ArithmeticMode::EXACT) {
        r.qcoeffs = decomp_factor<bigrat>(d, h.trace_q, h.scale_q, bigrat(0), bigrat(1));
    } else {
        r.fcoeffs = decomp_factor<cplx>(d, cplx(h.trace_f), cplx(h.scale_f),
                                        cplx(0), cplx(1));
    }
    return r;
}

LocalFactorPoly rs_pairing_factor(const HeckeLocal& h1, const HeckeLocal& h2,
                                  const IrredDecomp& d) {
    if (h1.p != h2.p)
        throw PrimeMismatch("rs_pairing_factor: Hecke data at different primes");
    if (d.factors != 2)
        throw std::invalid_argument("rs_pairing_factor: decomposition must have two factors");
    LocalFactorPoly r;
    r.p = h1.p;
    if (h1.mode == ArithmeticMode::EXACT && h2.mode == ArithmeticMode::EXACT) {
        r.mode = ArithmeticMode::EXACT;
        r.qcoeffs = decomp_factor<bigrat>(d, h1.trace_q, h1.scale_q,
                                          h2.trace_q, h2.scale_q);
    } else {
        r.mode = ArithmeticMode::FLOAT;
        cplx t1 = h1.mode == ArithmeticMode::EXACT
                      ? cplx(real(bigrat(h1.trace_q).convert_to<real>()))
                      : cplx(h1.trace_f);
        cplx s1 = h1.mode == ArithmeticMode::EXACT
                      ? cplx(real(bigrat(h1.scale_q).convert_to<real>()))
                      : cplx(h1.scale_f);
        cplx t2 = h2.mode == ArithmeticMode::EXACT
                      ? cplx(real(bigrat(h2.trace_q).convert_to<real>()))
                      : cplx(h2.trace_f);
        cplx s2 = h2.mode == ArithmeticMode::EXACT
                      ? cplx(real(bigrat(h2.scale_q).convert_to<real>()))
                      : cplx(h2.scale_f);
        r.fcoeffs = decomp_factor<cplx>(d, t1, s1, t2, s2);
    }
    return r;
}

LocalFactorPoly induced_local_factor(const SplittingType& s, long long p) {
    LocalFactorPoly r;
    r.p = p;
    r.mode = ArithmeticMode::FLOAT;
    switch (s.kind) {
        case Splitting::SPLIT:
            r.fcoeffs = {cplx(1), -(s.chi1 + s.chi2), s.chi1 * s.chi2};
            break;
        case Splitting::INERT:
            r.fcoeffs = {cplx(1), cplx(0), -s.chi1};
            break;
        case Splitting::RAMIFIED:
            r.fcoeffs = {cplx(1), -s.chi1};
            break;
    }
    return r;
}

namespace {

template <class S>
std::vector<S> power_sums_impl(const std::vector<S>& poly, int n) {
    int d = static_cast<int>(poly.size()) - 1;
    std::vector<S> e(d + 1);
    for (int i = 0; i <= d; ++i) e[i] = (i % 2 == 0) ? poly[i] : -poly[i];
    std::vector<S> ps(n, S(0));
    for (int k = 1; k <= n; ++k) {
        S acc(0);
        for (int i = 1; i < k && i <= d; ++i) {
            S term = e[i] * ps[k - i - 1];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        if (k <= d) {
            S term = S(k) * e[k];
            if (k % 2 == 1) acc += term;
            else acc -= term;
        }
        ps[k - 1] = acc;
    }
    return ps;
}

}  // namespace

std::vector<cplx> power_sums(const std::vector<cplx>& poly, int n) {
    return power_sums_impl(poly, n);
}

std::vector<bigrat> power_sums_exact(const std::vector<bigrat>& poly, int n) {
    return power_sums_impl(poly, n);
}

std::vector<bigrat> decomp_power_sums_exact(const IrredDecomp& d, const HeckeLocal& h1,
                                            const HeckeLocal& h2, int n) {
    if (h1.mode != ArithmeticMode::EXACT ||
        (d.factors == 2 && h2.mode != ArithmeticMode::EXACT))
        throw std::invalid_argument("decomp_power_sums_exact: EXACT Hecke data required");
    std::vector<bigrat> acc(n, bigrat(0));
    for (const auto& part : d.parts) {
        auto ps = part_power_sums<bigrat>(part, d.factors, h1.trace_q, h1.scale_q,
                                          d.factors == 2 ? h2.trace_q : bigrat(0),
                                          d.factors == 2 ? h2.scale_q : bigrat(1), n);
        for (int i = 0; i < n; ++i) acc[i] += bigrat(part.mult) * ps[i];
    }
    return acc;
}

std::vector<cplx> from_power_sums(const std::vector<cplx>& ps, int degree) {
    return factor_from_power_sums(ps, degree);
}

std::vector<cplx> tensor_factor(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    int n = da * db;
    auto pa = power_sums(a, n);
    auto pb = power_sums(b, n);
    std::vector<cplx> ps(n);
    for (int i = 0; i < n; ++i) ps[i] = pa[i] * pb[i];
    return from_power_sums(ps, n);
}

std::vector<cplx> sym2_factor(const std::vector<cplx>& a) {
    int d = static_cast<int>(a.size()) - 1;
    int n = d * (d + 1) / 2;
    auto pa = power_sums(a, 2 * n);
    std::vector<cplx> ps(n);
    for (int m = 1; m <= n; ++m) ps[m - 1] = (pa[m - 1] * pa[m - 1] + pa[2 * m - 1]) / 2;
    return from_power_sums(ps, n);
}

std::vector<cplx> alt2_factor(const std::vector<cplx>& a) {
    int d = static_cast<int>(a.size()) - 1;
    int n = d * (d - 1) / 2;
    auto pa = power_sums(a, 2 * n);
    std::vector<cplx> ps(n);
    for (int m = 1; m <= n; ++m) ps[m - 1] = (pa[m - 1] * pa[m - 1] - pa[2 * m - 1]) / 2;
    return from_power_sums(ps, n);
}

std::vector<cplx> mul_factors(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> r(a.size() + b.size() - 1, cplx(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace lf
