#pragma once

#include <cstdint>
#include <vector>

#include "sc6/report.hpp"

namespace sc6 {

// Eisenstein/cusp split of the main theta series over the genus, scaled by
// 4 so everything stays integral:
//   e4[n] = 4 a_E(n) = r_main(n) + 3 r_mate(n)
//   c4[n] = 4 a_C(n) = 3 (r_main(n) - r_mate(n))
struct GenusDecomposition {
    std::int64_t bound = 0;
    std::vector<std::int64_t> e4;
    std::vector<std::int64_t> c4;

    std::int64_t r_main(std::int64_t n) const { return (e4[(std::size_t)n] + c4[(std::size_t)n]) / 4; }
};

GenusDecomposition decompose(std::int64_t bound);

// For every n <= n_max with N = 24n+35 squarefree, asserts the Eisenstein
// specialization 4 a_E(N) = 12 h(-N).
CheckReport eisenstein_class_check(std::int64_t n_max);

// Coefficients of the weight-2 level-24 newform attached to the curve
// y^2 = x^3 - x^2 + x. For p >= 5, A(p) = p + 1 - #E(F_p) by a direct
// O(p) point count with a quadratic-residue table; A(2) = 0, A(3) = -1
// are the stored bad-prime values. Rejects composite input.
std::int64_t eigenform_ap(std::int64_t p);

// A(n) through factorization, multiplicativity, and the prime-power
// recursions A(p^{k+1}) = A(p)A(p^k) - p A(p^{k-1}) away from the level
// and A(p^k) = A(p)^k at p | 24.
std::int64_t eigenform_an(std::int64_t n);

// A(m) for all m <= m_max via a smallest-prime-factor sieve.
std::vector<std::int64_t> eigenform_table(std::int64_t m_max);

// Shimura lift consistency: b(n) = sum_{d | n, gcd(d,96)=1} (-3|d) a_C(3n^2/d^2)
// must equal kappa A(n), with kappa determined from n = 1 (kappa = 3/2,
// carried as 4b(n) = 6A(n) in integers).
CheckReport shimura_lift_check(std::int64_t n_max);

// The half-integral Hecke action at p^2 on the cusp part, reduced to
// representation numbers for squarefree N:
//   r_main(Np^2) - r_mate(Np^2) = (A(p) - (-N|p)) (r_main(N) - r_mate(N)).
// Requires N squarefree and p >= 5 prime with p not dividing 6N.
CheckReport hecke_relation_check(std::int64_t N, std::int64_t p);

// A(p)^2 <= 4p for all primes 5 <= p <= p_max, and no prime 5 <= p <= 17
// with 2 A(p) >= p - 1. Pure integer arithmetic.
CheckReport hasse_small_prime_check(std::int64_t p_max);

} // namespace sc6
