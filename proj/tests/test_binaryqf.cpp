#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sc6/arith.hpp"
#include "sc6/binaryqf.hpp"

using namespace sc6;

TEST_CASE("class_data: pinned small discriminants") {
    BinaryFormClassData d3 = class_data(-3);
    CHECK(d3.h == 1);
    CHECK(d3.w == 6);
    REQUIRE(d3.forms.size() == 1);
    CHECK(d3.forms[0].a == 1);
    CHECK(d3.forms[0].b == 1);
    CHECK(d3.forms[0].c == 1);

    CHECK(class_data(-4).h == 1);
    CHECK(class_data(-4).w == 4);
    CHECK(class_data(-83).h == 3);  // (1,1,21), (3,+-1,7)
    CHECK(class_data(-35).h == 2);  // (1,1,9), (3,1,3)
    CHECK(class_data(-11).h == 1);
    CHECK(class_data(-140).h == 6);
}

TEST_CASE("class_data: rejects invalid discriminants") {
    CHECK_THROWS_AS(class_data(0), std::invalid_argument);
    CHECK_THROWS_AS(class_data(5), std::invalid_argument);
    CHECK_THROWS_AS(class_data(-5), std::invalid_argument);  // -5 = 3 mod 4
    CHECK_THROWS_AS(class_data(-6), std::invalid_argument);  // -6 = 2 mod 4
}

TEST_CASE("class_data: every listed form is reduced, primitive, right discriminant") {
    for (std::int64_t D = -3; D >= -1200; --D) {
        std::int64_t m = ((D % 4) + 4) % 4;
        if (m != 0 && m != 1) continue;
        BinaryFormClassData data = class_data(D);
        CHECK(data.h == (std::int64_t)data.forms.size());
        for (const BinaryForm& f : data.forms) {
            CHECK(f.discriminant() == D);
            CHECK(f.is_reduced());
            CHECK(f.is_primitive());
            CHECK(f.a > 0);
        }
        // duplicate-free
        for (std::size_t i = 1; i < data.forms.size(); ++i) {
            const BinaryForm &x = data.forms[i - 1], &y = data.forms[i];
            CHECK((x.a != y.a || x.b != y.b || x.c != y.c));
        }
    }
}

TEST_CASE("class number multiplicativity under p^2 scaling") {
    // N = 1 is excluded: -4 has unit weight 4, and the extra units divide
    // the order class number, h(-4p^2) = (p - (-4|p))/2. Every N > 1 here
    // has -4N < -4 and the clean ratio.
    CHECK(class_data(-100).h == 2);
    CHECK(class_data(-4).h * (5 - kronecker(-4, 5)) == 4);

    for (std::int64_t N = 5; N <= 500; ++N) {
        if (gcd64(N, 6) != 1 || !is_squarefree(N)) continue;
        for (std::int64_t p : {5, 7, 11, 13}) {
            if (N % p == 0) continue;
            std::int64_t lhs = class_data(-4 * N * p * p).h;
            std::int64_t rhs = class_data(-4 * N).h * (p - kronecker(-4 * N, p));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("loeschian_count: pinned values and naive cross-check") {
    CHECK(loeschian_count(0) == 1);
    CHECK(loeschian_count(1) == 6);
    CHECK(loeschian_count(7) == 12);
    CHECK(loeschian_count(2) == 0);
    CHECK(loeschian_count(3) == 6);
    CHECK(loeschian_count(4) == 6);
    for (std::int64_t m = 0; m <= 500; ++m)
        CHECK(loeschian_count(m) == oracle::loeschian_naive(m));
}

TEST_CASE("loeschian_count positivity matches the prime classification") {
    // m is represented iff every prime = 2 mod 3 divides m to an even power.
    for (std::int64_t m = 1; m <= 10000; ++m) {
        bool representable = true;
        for (auto [p, e] : factorize(m).factors)
            if (p % 3 == 2 && e % 2 == 1) representable = false;
        CHECK((loeschian_count(m) > 0) == representable);
    }
}

TEST_CASE("loeschian_table: agrees with per-entry counts") {
    auto table = loeschian_table(1);
    REQUIRE(table.size() == 2);
    CHECK(table[0] == 1);
    CHECK(table[1] == 6);

    auto big = loeschian_table(20000);
    CHECK(big[0] == 1);
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::int64_t> dist(0, 20000);
    for (int i = 0; i < 100; ++i) {
        std::int64_t m = dist(rng);
        CHECK((std::int64_t)big[(std::size_t)m] == loeschian_count(m));
    }
}

TEST_CASE("loeschian_table: total lattice points in the ellipse") {
    const std::int64_t B = 1000;
    auto table = loeschian_table(B);
    std::int64_t total = 0;
    for (auto v : table) total += v;
    std::int64_t direct = 0;
    for (std::int64_t y = -40; y <= 40; ++y)
        for (std::int64_t z = -40; z <= 40; ++z)
            if (y * y + y * z + z * z <= B) ++direct;
    CHECK(total == direct);
}

TEST_CASE("loeschian_table: memory guard") {
    CHECK_THROWS_AS(loeschian_table(1000000000 / 32 + 1), std::length_error);
}
