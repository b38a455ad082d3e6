#pragma once

// Test-only brute-force oracles. Everything here is deliberately naive and
// independent of the library's counting paths: partitions are enumerated
// cell by cell, lattice counts use plain cubic loops with float-free
// bounds, and the Jacobi symbol comes from the textbook recursion.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

namespace oracle {

using std::int64_t;

// Visits every partition of n as a non-increasing vector of parts.
inline void for_each_partition(int64_t n, const std::function<void(const std::vector<int64_t>&)>& visit) {
    std::vector<int64_t> parts;
    std::function<void(int64_t, int64_t)> rec = [&](int64_t rest, int64_t max_part) {
        if (rest == 0) {
            visit(parts);
            return;
        }
        for (int64_t p = std::min(rest, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(rest - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

inline std::vector<int64_t> conjugate(const std::vector<int64_t>& parts) {
    if (parts.empty()) return {};
    std::vector<int64_t> conj((std::size_t)parts[0], 0);
    for (int64_t p : parts)
        for (int64_t j = 0; j < p; ++j) ++conj[(std::size_t)j];
    return conj;
}

// Hook length of cell (i, j): arm + leg + 1.
inline bool is_t_core(const std::vector<int64_t>& parts, int64_t t) {
    std::vector<int64_t> conj = conjugate(parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int64_t j = 0; j < parts[i]; ++j) {
            int64_t hook = (parts[i] - 1 - j) + (conj[(std::size_t)j] - 1 - (int64_t)i) + 1;
            if (hook % t == 0) return true;
        }
    return false;
}

inline int64_t count_partitions(int64_t n) {
    int64_t count = 0;
    for_each_partition(n, [&](const std::vector<int64_t>&) { ++count; });
    return count;
}

inline int64_t count_self_conjugate_t_cores(int64_t n, int64_t t) {
    int64_t count = 0;
    for_each_partition(n, [&](const std::vector<int64_t>& parts) {
        if (!is_t_core(parts, t) && parts == conjugate(parts)) ++count;
    });
    return count;
}

inline int64_t count_t_cores(int64_t n, int64_t t) {
    int64_t count = 0;
    for_each_partition(n, [&](const std::vector<int64_t>& parts) {
        if (!is_t_core(parts, t)) ++count;
    });
    return count;
}

// #{(y,z): y^2 + yz + z^2 = m} by a plain double loop.
inline int64_t loeschian_naive(int64_t m) {
    int64_t B = 1;
    while (B * B <= 4 * m / 3) ++B;
    int64_t count = 0;
    for (int64_t y = -B; y <= B; ++y)
        for (int64_t z = -B; z <= B; ++z)
            if (y * y + y * z + z * z == m) ++count;
    return count;
}

// Representation counts for the two genus members by cubic loops. The
// boxes come from the diagonal minorization Q >= eps (x^2+y^2+z^2) with a
// crudely safe eps per form.
inline int64_t rep_count_main_naive(int64_t n) {
    // 3x^2 + 32(y^2 + yz + z^2): y^2+yz+z^2 >= (y^2+z^2)/2
    int64_t count = 0;
    int64_t bx = 0;
    while (3 * (bx + 1) * (bx + 1) <= n) ++bx;
    int64_t byz = 0;
    while (16 * (byz + 1) * (byz + 1) <= n) ++byz;
    for (int64_t x = -bx; x <= bx; ++x)
        for (int64_t y = -byz; y <= byz; ++y)
            for (int64_t z = -byz; z <= byz; ++z)
                if (3 * x * x + 32 * (y * y + y * z + z * z) == n) ++count;
    return count;
}

inline int64_t rep_count_mate_naive(int64_t n) {
    // 11x^2 + 10xy + 11y^2 + 6xz - 6yz + 27z^2 >= 3(x^2 + y^2 + z^2):
    // eigenvalues of the Gram matrix/2 are > 3.
    int64_t b = 0;
    while (3 * (b + 1) * (b + 1) <= n) ++b;
    int64_t count = 0;
    for (int64_t x = -b; x <= b; ++x)
        for (int64_t y = -b; y <= b; ++y)
            for (int64_t z = -b; z <= b; ++z)
                if (11 * x * x + 10 * x * y + 11 * y * y + 6 * x * z - 6 * y * z +
                        27 * z * z == n)
                    ++count;
    return count;
}

// Textbook recursive Jacobi symbol for odd positive n.
inline int jacobi_naive(int64_t a, int64_t n) {
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace oracle
