#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "sc6/report.hpp"

namespace sc6 {

// Dense truncated power series with exact arbitrary-precision integer
// coefficients. Index = exponent, length = precision. All arithmetic is
// exact; there is no rounding anywhere.
class IntSeries {
public:
    explicit IntSeries(std::int64_t precision);
    static IntSeries one(std::int64_t precision);

    std::int64_t precision() const { return (std::int64_t)coeff_.size(); }
    const mpz_class& operator[](std::int64_t n) const { return coeff_[(std::size_t)n]; }
    mpz_class& operator[](std::int64_t n) { return coeff_[(std::size_t)n]; }

    IntSeries& operator+=(const IntSeries& o);
    IntSeries operator*(const IntSeries& o) const; // truncated convolution

    // Multiply in place by (1 - q^shift)^e; negative e divides, which is
    // always exact over the integers.
    void mul_binomial_factor(std::int64_t shift, std::int64_t e);

    // Multiply in place by q^amount (drops the truncated tail).
    void shift_up(std::int64_t amount);

private:
    std::vector<mpz_class> coeff_;
};

// s * prod_{k>=1} (1 - q^{a k})^e, truncated to s's precision.
IntSeries apply_eta_factor(const IntSeries& s, std::int64_t a, std::int64_t e);

// Formal eta quotient prod_k eta(a_k z)^{e_k} tracked as its product part
// plus the q^{sum a_k e_k / 24} prefactor. expand() requires the prefactor
// to be a nonnegative integer and applies it as an exponent shift.
class EtaQuotient {
public:
    EtaQuotient& factor(std::int64_t scale, std::int64_t exponent);
    std::int64_t prefactor_24ths() const; // sum of scale * exponent
    IntSeries expand(std::int64_t precision) const;

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> factors_;
};

// Generating function of self-conjugate 6-core counts: coefficient n is
// sc6(n), from prod (1-q^{2k})^2 (1-q^{12k})^3 / ((1-q^k)(1-q^{4k})).
IntSeries sc6_series(std::int64_t precision);

// 3-core counts: coefficient n is c3(n), from prod (1-q^{3k})^3 / (1-q^k).
IntSeries c3_series(std::int64_t precision);

// Coefficientwise check of the two classical identities behind the sc6
// factorization:
//   eta(48z)^2/eta(24z)   = sum q^{3(2m+1)^2}
//   eta(288z)^3/eta(96z)  = sum c3(m) q^{32(3m+1)}
// Failures carry the exponent and both coefficient values.
CheckReport verify_eta_identities(std::int64_t precision);

} // namespace sc6
