#include "sc6/binaryqf.hpp"

#include <numeric>
#include <stdexcept>

#include "sc6/arith.hpp"

namespace sc6 {

bool BinaryForm::is_reduced() const {
    std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

bool BinaryForm::is_primitive() const {
    return std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1;
}

BinaryFormClassData class_data(std::int64_t D) {
    if (D >= 0) throw std::invalid_argument("class_data: discriminant must be negative");
    std::int64_t Dmod4 = ((D % 4) + 4) % 4;
    if (Dmod4 != 0 && Dmod4 != 1)
        throw std::invalid_argument("class_data: discriminant must be 0 or 1 mod 4");

    BinaryFormClassData data;
    data.discriminant = D;
    const std::int64_t absD = -D;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        // b must match D's parity; start at -a and step by 2.
        std::int64_t b0 = -a;
        if (((b0 - D) % 2 + 2) % 2 != 0) ++b0;
        for (std::int64_t b = b0; b <= a; b += 2) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            BinaryForm f{a, b, c};
            if (!f.is_reduced() || !f.is_primitive()) continue;
            data.forms.push_back(f);
        }
    }
    data.h = (std::int64_t)data.forms.size();
    data.w = D == -3 ? 6 : (D == -4 ? 4 : 2);
    return data;
}

std::int64_t loeschian_count(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("loeschian_count: negative input");
    if (m == 0) return 1;
    std::int64_t count = 0;
    // For fixed z, y^2 + zy + (z^2 - m) = 0 has integer roots iff
    // 4m - 3z^2 is a perfect square of matching parity.
    std::int64_t zmax = isqrt(4 * m / 3);
    for (std::int64_t z = -zmax; z <= zmax; ++z) {
        std::int64_t disc = 4 * m - 3 * z * z;
        if (disc < 0) continue;
        std::int64_t s = isqrt(disc);
        if (s * s != disc) continue;
        if (((-z + s) % 2 + 2) % 2 == 0) ++count;
        if (s != 0 && ((-z - s) % 2 + 2) % 2 == 0) ++count;
    }
    return count;
}

std::vector<std::uint32_t> loeschian_table(std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("loeschian_table: negative bound");
    if (bound > 1000000000 / 32)
        throw std::length_error("loeschian_table: bound exceeds memory guard");
    std::vector<std::uint32_t> table((std::size_t)bound + 1, 0);
    std::int64_t ymax = isqrt(4 * bound / 3);
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        std::int64_t disc = 4 * bound - 3 * y * y;
        if (disc < 0) continue;
        std::int64_t s = isqrt(disc);
        std::int64_t zlo = ceil_div(-y - s, 2);
        std::int64_t zhi = floor_div(-y + s, 2);
        std::int64_t v = y * y + y * zlo + zlo * zlo;
        for (std::int64_t z = zlo; z <= zhi; ++z) {
            ++table[(std::size_t)v];
            v += y + 2 * z + 1; // value at z+1
        }
    }
    return table;
}

} // namespace sc6
