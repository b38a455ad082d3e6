#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc6 {

// Exact prime factorization of a positive 64-bit integer.
// Primes are strictly increasing, exponents >= 1, and the product of
// prime^exponent recomposes the value.
struct Factorization {
    std::int64_t value = 1;
    std::vector<std::pair<std::int64_t, int>> factors;

    std::int64_t recompose() const;
};

// Kronecker symbol (a|n), full extension: n may be zero, negative or even.
// (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8;
// (a|0) is 1 iff a = +-1; (a|-1) is -1 for a < 0.
int kronecker(std::int64_t a, std::int64_t n);

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime(std::int64_t n);

// Trial division with a mod-30 wheel; bails out to the primality test as
// soon as the remaining cofactor is prime. Throws std::invalid_argument
// for n < 1.
Factorization factorize(std::int64_t n);

// True iff no prime divides n more than once.
bool is_squarefree(std::int64_t n);

// floor(sqrt(n)) computed exactly (Newton iteration plus correction).
std::int64_t isqrt(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Floor/ceil division with sign-correct behavior for negative operands.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// Exact fraction with int64 numerator and positive denominator, always in
// lowest terms. Enough arithmetic for genus averages; not a general
// rational type.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    Rational operator+(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

} // namespace sc6
