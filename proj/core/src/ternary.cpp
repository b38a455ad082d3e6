#include "sc6/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sc6 {

namespace {

std::int64_t inner(const Mat3& A, const Vec3& v, const Vec3& w) {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += v[i] * A[i][j] * w[j];
    return s;
}

std::int64_t det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Vec3 matvec(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

} // namespace

TernaryForm::TernaryForm(const Mat3& gram) : gram_(gram) {
    for (int i = 0; i < 3; ++i) {
        if (gram_[i][i] % 2 != 0)
            throw std::invalid_argument("TernaryForm: diagonal entries must be even");
        for (int j = 0; j < 3; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("TernaryForm: Gram matrix must be symmetric");
    }
    std::int64_t m1 = gram_[0][0];
    std::int64_t m2 = gram_[0][0] * gram_[1][1] - gram_[0][1] * gram_[0][1];
    std::int64_t m3 = det3(gram_);
    if (m1 <= 0 || m2 <= 0 || m3 <= 0)
        throw std::invalid_argument("TernaryForm: form is not positive definite");
}

std::int64_t TernaryForm::det() const { return det3(gram_); }

std::int64_t TernaryForm::evaluate(const Vec3& v) const {
    return inner(gram_, v, v) / 2;
}

TernaryForm main_form() {
    return TernaryForm({{{6, 0, 0}, {0, 64, 32}, {0, 32, 64}}});
}

TernaryForm mate_form() {
    return TernaryForm({{{22, 10, 6}, {10, 22, -6}, {6, -6, 54}}});
}

GenusPair genus_pair() {
    GenusPair pair{main_form(), mate_form()};
    if (pair.main.det() != 18432 || pair.mate.det() != 18432)
        throw std::logic_error("genus_pair: Gram determinant is not 18432");
    return pair;
}

void for_each_representation(const TernaryForm& f, std::int64_t n,
                             const std::function<void(const Vec3&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_representation: n must be >= 0");
    const std::int64_t p = f.px(), q = f.qy(), r = f.rz();
    const std::int64_t u = f.uxy(), t = f.txz(), s = f.syz();
    // 4p*Q = (2px + uy + tz)^2 + G(y,z) with the positive definite
    //   G(y,z) = (4pq - u^2) y^2 + (4ps - 2ut) yz + (4pr - t^2) z^2,
    // so every representation has G(y,z) <= 4pn.
    const std::int64_t g1 = 4 * p * q - u * u;
    const std::int64_t g2 = 4 * p * s - 2 * u * t;
    const std::int64_t g3 = 4 * p * r - t * t;
    const std::int64_t M = 4 * p * n;
    const std::int64_t gdet = 4 * g1 * g3 - g2 * g2; // > 0
    const std::int64_t ymax = isqrt(4 * g3 * M / gdet);
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        std::int64_t zdisc = (g2 * g2 - 4 * g1 * g3) * y * y + 4 * g3 * M;
        if (zdisc < 0) continue;
        std::int64_t zs = isqrt(zdisc);
        std::int64_t zlo = ceil_div(-g2 * y - zs, 2 * g3);
        std::int64_t zhi = floor_div(-g2 * y + zs, 2 * g3);
        for (std::int64_t z = zlo; z <= zhi; ++z) {
            std::int64_t L = u * y + t * z;
            std::int64_t C = q * y * y + s * y * z + r * z * z - n;
            std::int64_t xdisc = L * L - 4 * p * C;
            if (xdisc < 0) continue;
            std::int64_t xs = isqrt(xdisc);
            if (xs * xs != xdisc) continue;
            std::int64_t top = -L + xs;
            if (top % (2 * p) == 0) visit({top / (2 * p), y, z});
            if (xs != 0) {
                std::int64_t bot = -L - xs;
                if (bot % (2 * p) == 0) visit({bot / (2 * p), y, z});
            }
        }
    }
}

std::int64_t rep_count(const TernaryForm& f, std::int64_t n) {
    std::int64_t count = 0;
    for_each_representation(f, n, [&](const Vec3&) { ++count; });
    return count;
}

std::int64_t primitive_rep_count(const TernaryForm& f, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("primitive_rep_count: n must be >= 1");
    std::int64_t count = 0;
    for_each_representation(f, n, [&](const Vec3& v) {
        std::int64_t g = std::gcd(std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]),
                                  v[2] < 0 ? -v[2] : v[2]);
        if (g == 1) ++count;
    });
    return count;
}

std::vector<std::uint32_t> rep_counts_upto(const TernaryForm& f, std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("rep_counts_upto: negative bound");
    if (bound > 1000000000 / 32)
        throw std::length_error("rep_counts_upto: bound exceeds memory guard");
    std::vector<std::uint32_t> counts((std::size_t)bound + 1, 0);
    const std::int64_t p = f.px(), q = f.qy(), r = f.rz();
    const std::int64_t u = f.uxy(), t = f.txz(), s = f.syz();
    const std::int64_t g1 = 4 * p * q - u * u;
    const std::int64_t g2 = 4 * p * s - 2 * u * t;
    const std::int64_t g3 = 4 * p * r - t * t;
    const std::int64_t M = 4 * p * bound;
    const std::int64_t gdet = 4 * g1 * g3 - g2 * g2;
    const std::int64_t ymax = isqrt(4 * g3 * M / gdet);
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        std::int64_t zdisc = (g2 * g2 - 4 * g1 * g3) * y * y + 4 * g3 * M;
        if (zdisc < 0) continue;
        std::int64_t zs = isqrt(zdisc);
        std::int64_t zlo = ceil_div(-g2 * y - zs, 2 * g3);
        std::int64_t zhi = floor_div(-g2 * y + zs, 2 * g3);
        for (std::int64_t z = zlo; z <= zhi; ++z) {
            std::int64_t L = u * y + t * z;
            std::int64_t C = q * y * y + s * y * z + r * z * z;
            std::int64_t xdisc = L * L - 4 * p * (C - bound);
            if (xdisc < 0) continue;
            std::int64_t xs = isqrt(xdisc);
            std::int64_t xlo = ceil_div(-L - xs, 2 * p);
            std::int64_t xhi = floor_div(-L + xs, 2 * p);
            if (xlo > xhi) continue;
            std::int64_t v = p * xlo * xlo + L * xlo + C;
            for (std::int64_t x = xlo; x <= xhi; ++x) {
                ++counts[(std::size_t)v];
                v += p * (2 * x + 1) + L; // value at x+1
            }
        }
    }
    return counts;
}

IntSeries theta_series(const TernaryForm& f, std::int64_t bound) {
    auto counts = rep_counts_upto(f, bound);
    IntSeries s(bound + 1);
    for (std::int64_t n = 0; n <= bound; ++n) s[n] = counts[(std::size_t)n];
    return s;
}

namespace {

// x^2 mod 32 depends only on x mod 16, so the solutions of
// 3x^2 = N (mod 32) form residue classes mod 16.
const std::array<std::vector<std::int64_t>, 32>& rq_residue_classes() {
    static const auto classes = [] {
        std::array<std::vector<std::int64_t>, 32> t;
        for (std::int64_t x0 = 0; x0 < 16; ++x0)
            t[(std::size_t)(3 * x0 * x0 % 32)].push_back(x0);
        return t;
    }();
    return classes;
}

void check_table_size(std::int64_t N, std::span<const std::uint32_t> table) {
    if ((std::int64_t)table.size() < N / 32 + 1)
        throw std::invalid_argument("rq_fast: Loeschian table too small for N");
}

} // namespace

std::int64_t rq_fast(std::int64_t N, std::span<const std::uint32_t> table) {
    if (N < 0) throw std::invalid_argument("rq_fast: N must be >= 0");
    check_table_size(N, table);
    std::int64_t total = 0;
    for (std::int64_t x0 : rq_residue_classes()[(std::size_t)(N % 32)]) {
        for (std::int64_t x = x0; 3 * x * x <= N; x += 16) {
            std::int64_t m = (N - 3 * x * x) / 32;
            total += (std::int64_t)table[(std::size_t)m] * (x == 0 ? 1 : 2);
        }
    }
    return total;
}

bool rq_positive(std::int64_t N, std::span<const std::uint32_t> table) {
    if (N < 0) throw std::invalid_argument("rq_positive: N must be >= 0");
    check_table_size(N, table);
    for (std::int64_t x0 : rq_residue_classes()[(std::size_t)(N % 32)])
        for (std::int64_t x = x0; 3 * x * x <= N; x += 16)
            if (table[(std::size_t)((N - 3 * x * x) / 32)] != 0) return true;
    return false;
}

AutomorphGroup automorph_group(const TernaryForm& f, bool proper_only) {
    const Mat3& A = f.gram();
    std::array<std::vector<Vec3>, 3> columns;
    for (int i = 0; i < 3; ++i)
        for_each_representation(f, A[i][i] / 2,
                                [&](const Vec3& v) { columns[(std::size_t)i].push_back(v); });

    AutomorphGroup group{f, {}};
    for (const Vec3& c0 : columns[0])
        for (const Vec3& c1 : columns[1]) {
            if (inner(A, c0, c1) != A[0][1]) continue;
            for (const Vec3& c2 : columns[2]) {
                if (inner(A, c0, c2) != A[0][2]) continue;
                if (inner(A, c1, c2) != A[1][2]) continue;
                Mat3 B{};
                for (int i = 0; i < 3; ++i) {
                    B[i][0] = c0[i];
                    B[i][1] = c1[i];
                    B[i][2] = c2[i];
                }
                std::int64_t d = det3(B);
                if (proper_only ? d == 1 : (d == 1 || d == -1))
                    group.matrices.push_back(B);
            }
        }

    std::sort(group.matrices.begin(), group.matrices.end());
    if (std::adjacent_find(group.matrices.begin(), group.matrices.end()) != group.matrices.end())
        throw std::logic_error("automorph_group: duplicate member");
    Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (!std::binary_search(group.matrices.begin(), group.matrices.end(), id))
        throw std::logic_error("automorph_group: identity missing");
    for (const Mat3& a : group.matrices)
        for (const Mat3& b : group.matrices)
            if (!std::binary_search(group.matrices.begin(), group.matrices.end(), matmul(a, b)))
                throw std::logic_error("automorph_group: not closed under multiplication");
    return group;
}

namespace {

// Orbits of the primitive representations of n under the automorph group,
// by canonical-representative scan over the lexicographically sorted list.
std::int64_t primitive_orbit_count(const TernaryForm& f, const AutomorphGroup& group,
                                   std::int64_t n) {
    std::vector<Vec3> reps;
    for_each_representation(f, n, [&](const Vec3& v) {
        std::int64_t g = std::gcd(std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]),
                                  v[2] < 0 ? -v[2] : v[2]);
        if (g == 1) reps.push_back(v);
    });
    std::sort(reps.begin(), reps.end());
    std::vector<char> seen(reps.size(), 0);
    std::int64_t orbits = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        for (const Mat3& B : group.matrices) {
            Vec3 w = matvec(B, reps[i]);
            auto it = std::lower_bound(reps.begin(), reps.end(), w);
            if (it == reps.end() || *it != w)
                throw std::logic_error("orbit scan: automorph image is not a representation");
            seen[(std::size_t)(it - reps.begin())] = 1;
        }
    }
    return orbits;
}

} // namespace

Rational genus_G(const GenusPair& pair, std::int64_t n, GenusCountMethod method) {
    if (n < 1) throw std::invalid_argument("genus_G: n must be >= 1");
    if (method == GenusCountMethod::formula) {
        return Rational(primitive_rep_count(pair.main, n), 12) +
               Rational(primitive_rep_count(pair.mate, n), 4);
    }
    return Rational(primitive_orbit_count(pair.main, automorph_group(pair.main), n) +
                        primitive_orbit_count(pair.mate, automorph_group(pair.mate), n),
                    1);
}

} // namespace sc6
