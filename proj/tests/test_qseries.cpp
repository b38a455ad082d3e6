#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sc6/binaryqf.hpp"
#include "sc6/qseries.hpp"

using namespace sc6;

TEST_CASE("apply_eta_factor: 1/(1-q^k) product gives partition numbers") {
    IntSeries s = apply_eta_factor(IntSeries::one(11), 1, -1);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(s[n] == oracle::count_partitions(n));
}

TEST_CASE("apply_eta_factor: exponent 0 is the identity") {
    IntSeries s = sc6_series(20);
    IntSeries t = apply_eta_factor(s, 5, 0);
    for (std::int64_t n = 0; n < 20; ++n) CHECK(s[n] == t[n]);
}

TEST_CASE("apply_eta_factor: (1-q^2)(1-q^4) truncated at 5") {
    IntSeries s = apply_eta_factor(IntSeries::one(5), 2, 1);
    CHECK(s[0] == 1);
    CHECK(s[1] == 0);
    CHECK(s[2] == -1);
    CHECK(s[3] == 0);
    CHECK(s[4] == -1);
}

TEST_CASE("multiply then divide by (1-q^a) is the identity") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> adist(1, 40);
    IntSeries s = sc6_series(200);
    for (int i = 0; i < 50; ++i) {
        std::int64_t a = adist(rng);
        IntSeries t = s;
        t.mul_binomial_factor(a, 1);
        t.mul_binomial_factor(a, -1);
        for (std::int64_t n = 0; n < 200; ++n) CHECK(t[n] == s[n]);
    }
}

TEST_CASE("sc6_series: pinned coefficients") {
    IntSeries s = sc6_series(80);
    CHECK(s[0] == 1);
    CHECK(s[1] == 1); // the unique self-conjugate 6-core of 1 is (1)
    CHECK(s[2] == 0);
    CHECK(s[12] == 0);
    CHECK(s[13] == 0);
    CHECK(s[73] == 0);
}

TEST_CASE("sc6_series: nonnegative and equal to the hook-length enumeration") {
    IntSeries s = sc6_series(61);
    for (std::int64_t n = 0; n <= 60; ++n) {
        CHECK(s[n] >= 0);
        CHECK(s[n] == oracle::count_self_conjugate_t_cores(n, 6));
    }
}

TEST_CASE("c3_series: pinned values and hook-length enumeration") {
    IntSeries s = c3_series(31);
    CHECK(s[0] == 1);
    CHECK(s[1] == 1);
    CHECK(s[2] == 2); // (2) and (1,1)
    for (std::int64_t n = 0; n <= 30; ++n)
        CHECK(s[n] == oracle::count_t_cores(n, 3));
}

TEST_CASE("c3_series matches the hexagonal lattice count") {
    IntSeries s = c3_series(2001);
    for (std::int64_t n = 0; n <= 2000; ++n)
        CHECK(6 * s[n] == loeschian_count(3 * n + 1));
}

TEST_CASE("EtaQuotient: prefactor bookkeeping") {
    EtaQuotient q;
    q.factor(48, 2).factor(24, -1);
    CHECK(q.prefactor_24ths() == 72);
    IntSeries s = q.expand(40);
    CHECK(s[3] == 1);  // 3 * 1^2
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
    CHECK(s[2] == 0);
    CHECK(s[27] == 1); // 3 * 3^2
    CHECK(s[12] == 0);

    EtaQuotient bad;
    bad.factor(5, 1); // 5/24 is not an integer
    CHECK_THROWS_AS(bad.expand(10), std::domain_error);
}

TEST_CASE("verify_eta_identities at precision 1e4") {
    CheckReport r = verify_eta_identities(10000);
    CHECK(r.passed());
    CHECK(r.checks == 20000);
}

TEST_CASE("second eta identity: coefficient at 32(3*1+1) = 128 is c3(1)") {
    IntSeries lhs = EtaQuotient().factor(288, 3).factor(96, -1).expand(130);
    CHECK(lhs[128] == 1);
    CHECK(lhs[32] == 1); // c3(0)
    for (std::int64_t n = 33; n < 128; ++n) CHECK(lhs[n] == 0);
}

TEST_CASE("series multiplication agrees with the factored sc6 build") {
    // Build sc6 as (eta(48z)^2/eta(24z)) * (eta(288z)^3/eta(96z)) in the
    // 24n+35 variable and compare against sc6_series via index arithmetic.
    const std::int64_t P = 24 * 40 + 36;
    IntSeries feta = EtaQuotient().factor(48, 2).factor(24, -1).expand(P) *
                     EtaQuotient().factor(288, 3).factor(96, -1).expand(P);
    IntSeries direct = sc6_series(41);
    for (std::int64_t n = 0; n <= 40; ++n) CHECK(feta[24 * n + 35] == direct[n]);
    for (std::int64_t m = 0; m < P; ++m)
        if (m % 24 != 11) CHECK(feta[m] == 0); // 24n+35 = 11 mod 24
}
