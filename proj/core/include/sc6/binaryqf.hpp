#pragma once

#include <cstdint>
#include <vector>

namespace sc6 {

// Positive definite integral binary form a x^2 + b xy + c y^2.
struct BinaryForm {
    std::int64_t a = 0, b = 0, c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_primitive() const;
};

// Complete list of reduced primitive forms of a negative discriminant D
// (D = 0 or 1 mod 4, non-fundamental allowed). h is the form class number
// of the order of discriminant D; w is the unit weight 6 / 4 / 2 for
// D = -3 / -4 / otherwise.
struct BinaryFormClassData {
    std::int64_t discriminant = 0;
    std::vector<BinaryForm> forms;
    std::int64_t h = 0;
    int w = 2;
};

// Exhaustive reduced-form enumeration over |b| <= a <= sqrt(|D|/3).
// Throws std::invalid_argument for D >= 0 or D = 2, 3 mod 4.
BinaryFormClassData class_data(std::int64_t D);

// Number of (y, z) in Z^2 with y^2 + yz + z^2 = m.
std::int64_t loeschian_count(std::int64_t m);

// table[m] = loeschian_count(m) for all m <= bound, built in one pass over
// the elliptic region. Rejects bounds above 10^9/32 entries.
std::vector<std::uint32_t> loeschian_table(std::int64_t bound);

} // namespace sc6
