#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sc6/arith.hpp"
#include "sc6/qseries.hpp"

namespace sc6 {

using Vec3 = std::array<std::int64_t, 3>;
using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

// Positive definite integral ternary form Q(v) = v^T A v / 2 with A
// symmetric and even on the diagonal. Construction validates positivity
// via the leading principal minors.
class TernaryForm {
public:
    explicit TernaryForm(const Mat3& gram);

    const Mat3& gram() const { return gram_; }
    std::int64_t det() const;
    std::int64_t evaluate(const Vec3& v) const;

    // Polynomial coefficients: Q = p x^2 + q y^2 + r z^2 + u xy + t xz + s yz.
    std::int64_t px() const { return gram_[0][0] / 2; }
    std::int64_t qy() const { return gram_[1][1] / 2; }
    std::int64_t rz() const { return gram_[2][2] / 2; }
    std::int64_t uxy() const { return gram_[0][1]; }
    std::int64_t txz() const { return gram_[0][2]; }
    std::int64_t syz() const { return gram_[1][2]; }

private:
    Mat3 gram_;
};

// The genus pair behind the sc6 count: main is 3x^2 + 32y^2 + 32yz + 32z^2,
// mate is 11x^2 + 10xy + 11y^2 + 6xz - 6yz + 27z^2. Both Gram determinants
// equal 18432, checked at construction.
struct GenusPair {
    TernaryForm main;
    TernaryForm mate;
};

TernaryForm main_form();
TernaryForm mate_form();
GenusPair genus_pair();

// Visits every integer vector v with f(v) = n. Bounds come from the exact
// integer Schur complement of the Gram matrix; no floating point.
void for_each_representation(const TernaryForm& f, std::int64_t n,
                             const std::function<void(const Vec3&)>& visit);

std::int64_t rep_count(const TernaryForm& f, std::int64_t n);

// Representations with gcd(x, y, z) = 1.
std::int64_t primitive_rep_count(const TernaryForm& f, std::int64_t n);

// Counts for every value 0..bound in a single pass over the lattice points
// of the ellipsoid. Memory guard as for loeschian_table.
std::vector<std::uint32_t> rep_counts_upto(const TernaryForm& f, std::int64_t bound);

// Same data as an exact integer series: coefficient n is rep_count(f, n).
IntSeries theta_series(const TernaryForm& f, std::int64_t bound);

// r_Q(N) for the main form through the Loeschian table:
//   sum over x with 3x^2 <= N, N - 3x^2 = 0 mod 32, of table[(N-3x^2)/32].
// Candidate x are strided by 16 inside the residue classes solving
// 3x^2 = N (mod 32). Rejects tables shorter than N/32 + 1.
std::int64_t rq_fast(std::int64_t N, std::span<const std::uint32_t> table);

// Positivity-only variant: early-exits at the first nonzero table hit.
bool rq_positive(std::int64_t N, std::span<const std::uint32_t> table);

// All integral B with B^T A B = A; proper (det +1) members only by
// default, the full orthogonal group behind the flag. Built by assembling
// candidate columns from the representations of the diagonal values.
struct AutomorphGroup {
    TernaryForm form;
    std::vector<Mat3> matrices;
};

AutomorphGroup automorph_group(const TernaryForm& f, bool proper_only = true);

enum class GenusCountMethod { orbit, formula };

// Essentially distinct primitive representations of n by the genus:
// formula evaluates R_main/12 + R_mate/4 exactly; orbit counts orbits of
// primitive representations under each automorph group.
Rational genus_G(const GenusPair& pair, std::int64_t n, GenusCountMethod method);

} // namespace sc6
