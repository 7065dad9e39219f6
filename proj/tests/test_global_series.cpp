#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lf/global_series.hpp"

using namespace lf;

namespace {

FormRef delta_ref(bool unitary = false) {
    static auto d = std::make_shared<const NewformQExpansion>(delta_q_expansion(1024));
    return FormRef::holomorphic(d, unitary);
}

LSeriesSpec single_spec(std::string name, FormRef f, IrredDecomp d, int exponent = 1) {
    LSeriesSpec s;
    s.name = std::move(name);
    SpecFactor fac;
    fac.f1 = std::move(f);
    fac.decomp = std::move(d);
    fac.exponent = exponent;
    s.factors = {fac};
    return s;
}

LSeriesSpec pair_spec(std::string name, FormRef a, FormRef b, IrredDecomp d) {
    LSeriesSpec s;
    s.name = std::move(name);
    SpecFactor fac;
    fac.f1 = std::move(a);
    fac.f2 = std::move(b);
    fac.decomp = std::move(d);
    s.factors = {fac};
    return s;
}

// Lattice-point oracle for the Gaussian divisor sum: r(n)/4 where r(n) is
// the number of (x, y) with x^2 + y^2 = n.
long long gaussian_divisors(long long n) {
    long long count = 0;
    for (long long x = -n; x <= n; ++x) {
        if (x * x > n) continue;
        for (long long y = 0; x * x + y * y <= n; ++y)
            if (x * x + y * y == n) count += (y == 0 ? 1 : 2);
    }
    return count / 4;
}

}  // namespace

TEST_CASE("zeta expands to the constant sequence 1") {
    auto c = expand_coeffs(zeta_spec(), 100);
    REQUIRE(c.mode == ArithmeticMode::EXACT);
    for (long long n = 1; n <= 100; ++n) CHECK(c.qvalues[n - 1] == 1);
}

TEST_CASE("zeta * chi(-4) matches the Gaussian lattice-point oracle") {
    auto spec = product_spec("zeta*chi(-4)", {zeta_spec(), character_spec(-4)});
    auto c = expand_coeffs(spec, 100);
    for (long long n = 1; n <= 100; n += 2)
        CHECK(c.qvalues[n - 1] == bigrat(gaussian_divisors(n)));
}

TEST_CASE("self-pairing coefficients are squares at primes") {
    // exact (classical normalization)
    auto exact = pair_spec("delta x delta", delta_ref(), delta_ref(),
                           pairing_decomp(1, 0, 1, 0));
    auto ce = expand_coeffs(exact, 200);
    auto d = delta_q_expansion(200);
    for (long long p : primes_up_to(200))
        CHECK(ce.qvalues[p - 1] == bigrat(d.a(p) * d.a(p)));
    // unitary (FLOAT)
    auto uni = pair_spec("delta x delta unitary", delta_ref(true), delta_ref(true),
                         pairing_decomp(1, 0, 1, 0));
    auto cf = expand_coeffs(uni, 200);
    REQUIRE(cf.mode == ArithmeticMode::FLOAT);
    for (long long p : primes_up_to(200)) CHECK(cf.fvalues[p - 1] >= 0);
}

TEST_CASE("product expansion equals the Dirichlet convolution of the parts") {
    auto a = zeta_spec();
    auto b = single_spec("sym2", delta_ref(), balanced_sym_decomp(2));
    auto prod = product_spec("zeta*sym2", {a, b});
    auto direct = expand_coeffs(prod, 1000);
    auto conv = convolve(expand_coeffs(a, 1000), expand_coeffs(b, 1000));
    for (long long n = 1; n <= 1000; ++n)
        CHECK(direct.qvalues[n - 1] == conv.qvalues[n - 1]);
}

TEST_CASE("identical specs match at every prime") {
    auto s = single_spec("sym2", delta_ref(), balanced_sym_decomp(2));
    auto rep = verify_local_identity(s, s, 2, 100);
    CHECK(rep.all_match());
    CHECK(rep.checks.size() == primes_up_to(100).size());
}

TEST_CASE("positivity reports") {
    auto zc = expand_coeffs(zeta_spec(), 1000);
    CHECK(positivity_report(zc).nonnegative);

    auto lc = expand_coeffs(single_spec("L(delta)", delta_ref(), sym_decomp(1, 0)), 50);
    auto rep = positivity_report(lc);
    CHECK_FALSE(rep.nonnegative);
    CHECK(rep.first_violation == 2);  // first coefficient is -24

    auto sp = pair_spec("delta x delta", delta_ref(), delta_ref(),
                        pairing_decomp(1, 0, 1, 0));
    CHECK(positivity_report(expand_coeffs(sp, 1000)).nonnegative);
}

TEST_CASE("log-derivative coefficients of zeta are log p at prime powers") {
    auto ld = log_deriv_coeffs(zeta_spec(), 100);
    for (long long n = 1; n <= 100; ++n) {
        bool pp = false;
        for (long long p : primes_up_to(100))
            for (long long q = p; q <= 100; q *= p)
                if (q == n) pp = true;
        if (pp) {
            long long p = n;
            while (true) {
                bool found = false;
                for (long long d = 2; d < p; ++d)
                    if (p % d == 0) {
                        p = d;
                        found = true;
                        break;
                    }
                if (!found) break;
            }
            CHECK(abs(ld[n - 1] - log(real(p))) < 1e-40);
        } else {
            CHECK(ld[n - 1] == 0);
        }
    }
}

TEST_CASE("self-pairing log-derivative power sums are nonnegative") {
    auto sp = pair_spec("delta x delta", delta_ref(), delta_ref(),
                        pairing_decomp(1, 0, 1, 0));
    for (long long p : primes_up_to(100))
        for (const auto& v : local_log_deriv_power_sums(sp, p, 6)) CHECK(v >= 0);
    // the standard L-function alone has negative ones
    auto solo = single_spec("L(delta)", delta_ref(), sym_decomp(1, 0));
    bool negative_seen = false;
    for (long long p : primes_up_to(100))
        for (const auto& v : local_log_deriv_power_sums(solo, p, 6))
            if (v < 0) negative_seen = true;
    CHECK(negative_seen);
}

TEST_CASE("registry entries verify with their expected status") {
    for (const auto& e : identity_registry()) {
        auto rep = e.run();
        INFO(e.tag, ": ", rep.serialize());
        CHECK(rep.all_match() == e.expect_match);
        if (!e.expect_match) CHECK_FALSE(e.annotation.empty());
    }
}

TEST_CASE("printed 5.16 fails already at p = 2") {
    auto rep = registry_entry("5.16").run();
    REQUIRE_FALSE(rep.checks.empty());
    CHECK(rep.checks[0].label == "p=2");
    CHECK_FALSE(rep.checks[0].match);
}

TEST_CASE("degree bookkeeping of the degree-64 pairing") {
    // 64 = 1 + 4 + 4 + 3 + 3 + 16 + 9 + 12 + 12
    CHECK(1 + 4 + 4 + 3 + 3 + 16 + 9 + 12 + 12 == 64);
    auto rep = registry_entry("4.15").run();
    CHECK(rep.all_match());
}

TEST_CASE("registry lookup rejects unknown tags") {
    CHECK_THROWS(registry_entry("9.99"));
}
