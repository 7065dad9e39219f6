#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lf/forms_data.hpp"
#include "lf/local_factors.hpp"

using namespace lf;

namespace {

real cabs(const cplx& z) { return abs(z); }

// Independent oracle: extract the two inverse roots of x^2 - t x + s by the
// quadratic formula, list the inverse roots of each constituent explicitly,
// and expand prod (1 - r X) term by term.  The production path never takes
// roots, so agreement is meaningful.
std::vector<cplx> oracle_factor(const IrredDecomp& d, cplx t1, cplx s1, cplx t2,
                                cplx s2) {
    auto roots = [](cplx t, cplx s) {
        cplx disc = sqrt(t * t - cplx(4) * s);
        return std::pair<cplx, cplx>{(t + disc) / 2, (t - disc) / 2};
    };
    auto [a1, b1] = roots(t1, s1);
    auto [a2, b2] = roots(t2, s2);
    std::vector<cplx> rs;
    for (const auto& part : d.parts) {
        std::vector<cplx> first, second;
        for (int i = 0; i <= part.j; ++i)
            first.push_back(pow(a1, part.j - i) * pow(b1, i) * pow(a1 * b1, part.k));
        if (d.factors == 2)
            for (int i = 0; i <= part.j2; ++i)
                second.push_back(pow(a2, part.j2 - i) * pow(b2, i) *
                                 pow(a2 * b2, part.k2));
        else
            second.push_back(cplx(1));
        for (long long m = 0; m < part.mult; ++m)
            for (const auto& u : first)
                for (const auto& v : second) rs.push_back(u * v);
    }
    std::vector<cplx> poly{cplx(1)};
    for (const auto& r : rs) {
        std::vector<cplx> next(poly.size() + 1, cplx(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= poly[i] * r;
        }
        poly = std::move(next);
    }
    return poly;
}

void check_close(const std::vector<cplx>& a, const std::vector<cplx>& b,
                 double tol = 1e-30) {
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        real scale = std::max(real(1), cabs(b[i]));
        CHECK(cabs(a[i] - b[i]) / scale < tol);
    }
}

IrredDecomp single(int j, int k) {
    IrredDecomp d;
    d.factors = 1;
    d.parts = {{j, k, 0, 0, 1}};
    return d;
}

}  // namespace

TEST_CASE("weight-12 form at p=2: standard and sym^2 factors") {
    auto delta = delta_q_expansion(10);
    HeckeLocal h = HeckeLocal::exact(2, bigrat(delta.a(2)), bigrat(bigint(1) << 11));

    auto std2 = local_factor(h, single(1, 0));
    REQUIRE(std2.qcoeffs.size() == 3);
    CHECK(std2.qcoeffs[0] == 1);
    CHECK(std2.qcoeffs[1] == 24);    // -a_2
    CHECK(std2.qcoeffs[2] == 2048);  // 2^11

    auto sym2 = local_factor(h, single(2, 0));
    REQUIRE(sym2.qcoeffs.size() == 4);
    CHECK(sym2.qcoeffs[0] == bigrat(1));
    CHECK(sym2.qcoeffs[1] == bigrat(1472));
    CHECK(sym2.qcoeffs[2] == bigrat(-3014656));
    CHECK(sym2.qcoeffs[3] == bigrat(-8589934592LL));
}

TEST_CASE("exact factors agree with the root-extraction oracle") {
    HeckeLocal h = HeckeLocal::exact(5, bigrat(-17), bigrat(125));
    for (int j = 1; j <= 6; ++j)
        for (int k = -2; k <= 1; ++k) {
            auto f = local_factor(h, single(j, k));
            auto o = oracle_factor(single(j, k), cplx(-17), cplx(125), cplx(0), cplx(1));
            check_close(f.as_complex(), o);
        }
}

TEST_CASE("pairing factors agree with the root-extraction oracle") {
    HeckeLocal h1 = HeckeLocal::exact(3, bigrat(7), bigrat(27));
    HeckeLocal h2 = HeckeLocal::exact(3, bigrat(-4), bigrat(9));
    IrredDecomp d;
    d.factors = 2;
    d.parts = {{2, 0, 1, 1, 1}, {1, -1, 3, 0, 2}};
    auto f = rs_pairing_factor(h1, h2, d);
    auto o = oracle_factor(d, cplx(7), cplx(27), cplx(-4), cplx(9));
    check_close(f.as_complex(), o);
    CHECK(f.degree() == d.dim());
}

TEST_CASE("degree-4 pairing equals the power-sum tensor of the two standards") {
    auto delta = delta_q_expansion(10);
    auto f16 = level_one_eigenform(16, 10);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        HeckeLocal h1 = HeckeLocal::exact(p, bigrat(delta.a(p)),
                                          bigrat(bigint(pow(bigint(p), 11))));
        HeckeLocal h2 = HeckeLocal::exact(p, bigrat(f16.a(p)),
                                          bigrat(bigint(pow(bigint(p), 15))));
        IrredDecomp pair;
        pair.factors = 2;
        pair.parts = {{1, 0, 1, 0, 1}};
        auto f = rs_pairing_factor(h1, h2, pair);
        auto t = tensor_factor(local_factor(h1, single(1, 0)).as_complex(),
                               local_factor(h2, single(1, 0)).as_complex());
        check_close(f.as_complex(), t, 1e-25);
    }
}

TEST_CASE("sym2/alt2 power-sum transforms match plethysm factors") {
    HeckeLocal h = HeckeLocal::exact(7, bigrat(11), bigrat(343));
    auto std7 = local_factor(h, single(1, 0)).as_complex();
    auto via_pleth_s = local_factor(h, decompose(plethysm(irreducible_char(1, 0),
                                                          Plethysm::SYM2)));
    check_close(sym2_factor(std7), via_pleth_s.as_complex());
    auto via_pleth_a = local_factor(h, decompose(plethysm(irreducible_char(1, 0),
                                                          Plethysm::ALT2)));
    check_close(alt2_factor(std7), via_pleth_a.as_complex());
}

TEST_CASE("balanced sym^2 (det^{-1} twist) is self-dual and has 1 as inverse root") {
    auto delta = delta_q_expansion(10);
    HeckeLocal h = HeckeLocal::exact(2, bigrat(delta.a(2)), bigrat(bigint(1) << 11));
    auto f = local_factor(h, single(2, -1));
    REQUIRE(f.qcoeffs.size() == 4);
    // evaluate at X = 1: one normalized inverse root is alpha beta / alpha beta = 1
    bigrat v = f.qcoeffs[0] + f.qcoeffs[1] + f.qcoeffs[2] + f.qcoeffs[3];
    CHECK(v == 0);
    // self-duality: palindromic coefficients
    CHECK(f.qcoeffs[0] == -f.qcoeffs[3]);
    CHECK(f.qcoeffs[1] == -f.qcoeffs[2]);
}

TEST_CASE("multiplying factors at different primes is rejected") {
    HeckeLocal h2 = HeckeLocal::exact(2, bigrat(1), bigrat(2));
    HeckeLocal h3 = HeckeLocal::exact(3, bigrat(1), bigrat(3));
    auto a = local_factor(h2, single(1, 0));
    auto b = local_factor(h3, single(1, 0));
    CHECK_THROWS_AS(mul(a, b), PrimeMismatch);
    CHECK_THROWS_AS(rs_pairing_factor(h2, h3, [] {
                        IrredDecomp d;
                        d.factors = 2;
                        d.parts = {{1, 0, 1, 0, 1}};
                        return d;
                    }()),
                    PrimeMismatch);
}

TEST_CASE("power sums round-trip through Newton's identities") {
    std::vector<cplx> poly{cplx(1), cplx(0.5, -1.25), cplx(-2, 0.75), cplx(0.125, 3)};
    auto ps = power_sums(poly, 3);
    auto back = from_power_sums(ps, 3);
    check_close(back, poly);
}

TEST_CASE("induced local factors by splitting type") {
    cplx w = exp(cplx(0, 1) * pi_const() / 3);
    auto s = induced_local_factor(SplittingType::split(w, conj(w)), 13);
    check_close(s.fcoeffs, {cplx(1), -(w + conj(w)), cplx(1)});
    auto i = induced_local_factor(SplittingType::inert(w), 13);
    check_close(i.fcoeffs, {cplx(1), cplx(0), -w});
    auto r = induced_local_factor(SplittingType::ramified(w), 13);
    check_close(r.fcoeffs, {cplx(1), -w});
}
