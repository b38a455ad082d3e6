#include "sc6/arith.hpp"

#include <cmath>
#include <numeric>

namespace sc6 {

std::int64_t Factorization::recompose() const {
    std::int64_t v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign; // (a|-1)
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int twos = 0;
        while (n % 2 == 0) { n /= 2; ++twos; }
        std::int64_t am8 = ((a % 8) + 8) % 8;
        if (twos % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // n is now odd and positive; standard Jacobi ladder.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Witness set proven sufficient for all n < 2^64.
constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::int64_t sn) {
    if (sn < 2) return false;
    u64 n = (u64)sn;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (u64 base : kMrBases) {
        u64 x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    auto divide_out = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) f.factors.emplace_back(p, e);
        return e > 0;
    };
    for (std::int64_t p : {2, 3, 5}) divide_out(p);
    // Increments of the mod-30 wheel starting at 7.
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::int64_t c = 7;
    int wi = 0;
    bool cofactor_checked = false;
    while (n > 1 && c <= n / c) {
        if (!cofactor_checked) {
            if (is_prime(n)) break;
            cofactor_checked = true;
        }
        if (divide_out(c)) cofactor_checked = false;
        c += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

bool is_squarefree(std::int64_t n) {
    for (auto [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n < 2) return n;
    std::int64_t x = (std::int64_t)std::sqrt((double)n);
    if (x < 1) x = 1;
    // One Newton step from the float seed, then exact correction.
    // x stays >= 1 throughout: the decrement loop stops at x = 1 since
    // 1 > n/1 is false for n >= 2.
    x = (x + n / x) / 2;
    while (x > n / x) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace sc6
