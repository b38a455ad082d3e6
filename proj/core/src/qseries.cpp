#include "sc6/qseries.hpp"

#include <stdexcept>

namespace sc6 {

IntSeries::IntSeries(std::int64_t precision) {
    if (precision < 1) throw std::invalid_argument("IntSeries: precision must be >= 1");
    coeff_.resize((std::size_t)precision); // mpz_class default-constructs to 0
}

IntSeries IntSeries::one(std::int64_t precision) {
    IntSeries s(precision);
    s.coeff_[0] = 1;
    return s;
}

IntSeries& IntSeries::operator+=(const IntSeries& o) {
    if (o.precision() != precision())
        throw std::invalid_argument("IntSeries: precision mismatch");
    for (std::size_t n = 0; n < coeff_.size(); ++n) coeff_[n] += o.coeff_[n];
    return *this;
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    if (o.precision() != precision())
        throw std::invalid_argument("IntSeries: precision mismatch");
    IntSeries r(precision());
    mpz_class tmp;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; i + j < coeff_.size(); ++j) {
            if (o.coeff_[j] == 0) continue;
            tmp = coeff_[i] * o.coeff_[j];
            r.coeff_[i + j] += tmp;
        }
    }
    return r;
}

void IntSeries::mul_binomial_factor(std::int64_t shift, std::int64_t e) {
    if (shift < 1) throw std::invalid_argument("mul_binomial_factor: shift must be >= 1");
    const std::int64_t P = precision();
    if (shift >= P || e == 0) return;
    if (e > 0) {
        // (1 - q^s): c[n] -= c[n-s], from the top down.
        for (std::int64_t rep = 0; rep < e; ++rep)
            for (std::int64_t n = P - 1; n >= shift; --n)
                coeff_[(std::size_t)n] -= coeff_[(std::size_t)(n - shift)];
    } else {
        // 1/(1 - q^s): c[n] += c[n-s], from the bottom up.
        for (std::int64_t rep = 0; rep < -e; ++rep)
            for (std::int64_t n = shift; n < P; ++n)
                coeff_[(std::size_t)n] += coeff_[(std::size_t)(n - shift)];
    }
}

void IntSeries::shift_up(std::int64_t amount) {
    if (amount < 0) throw std::invalid_argument("shift_up: negative amount");
    if (amount == 0) return;
    const std::int64_t P = precision();
    for (std::int64_t n = P - 1; n >= amount; --n)
        coeff_[(std::size_t)n] = coeff_[(std::size_t)(n - amount)];
    for (std::int64_t n = 0; n < std::min(amount, P); ++n)
        coeff_[(std::size_t)n] = 0;
}

IntSeries apply_eta_factor(const IntSeries& s, std::int64_t a, std::int64_t e) {
    if (a < 1) throw std::invalid_argument("apply_eta_factor: a must be >= 1");
    IntSeries r = s;
    for (std::int64_t k = 1; a * k < r.precision(); ++k)
        r.mul_binomial_factor(a * k, e);
    return r;
}

EtaQuotient& EtaQuotient::factor(std::int64_t scale, std::int64_t exponent) {
    if (scale < 1) throw std::invalid_argument("EtaQuotient: scale must be >= 1");
    factors_.emplace_back(scale, exponent);
    return *this;
}

std::int64_t EtaQuotient::prefactor_24ths() const {
    std::int64_t s = 0;
    for (auto [a, e] : factors_) s += a * e;
    return s;
}

IntSeries EtaQuotient::expand(std::int64_t precision) const {
    const std::int64_t pre = prefactor_24ths();
    if (pre < 0 || pre % 24 != 0)
        throw std::domain_error("EtaQuotient: q-prefactor is not a nonnegative integer");
    IntSeries s = IntSeries::one(precision);
    // Interleave the factor families per k to keep intermediate growth down.
    for (std::int64_t k = 1; k < precision; ++k) {
        bool any = false;
        for (auto [a, e] : factors_) {
            if (a * k < precision) {
                s.mul_binomial_factor(a * k, e);
                any = true;
            }
        }
        if (!any) break;
    }
    s.shift_up(pre / 24);
    return s;
}

IntSeries sc6_series(std::int64_t precision) {
    IntSeries s = IntSeries::one(precision);
    for (std::int64_t k = 1; k < precision; ++k) {
        s.mul_binomial_factor(k, -1);
        if (2 * k < precision) s.mul_binomial_factor(2 * k, 2);
        if (4 * k < precision) s.mul_binomial_factor(4 * k, -1);
        if (12 * k < precision) s.mul_binomial_factor(12 * k, 3);
    }
    return s;
}

IntSeries c3_series(std::int64_t precision) {
    IntSeries s = IntSeries::one(precision);
    for (std::int64_t k = 1; k < precision; ++k) {
        s.mul_binomial_factor(k, -1);
        if (3 * k < precision) s.mul_binomial_factor(3 * k, 3);
    }
    return s;
}

CheckReport verify_eta_identities(std::int64_t precision) {
    CheckReport report("eta-identities");

    // Identity 1: eta(48z)^2/eta(24z), prefactor (2*48-24)/24 = 3, equals
    // the sparse series with coefficient 1 exactly at exponents 3(2m+1)^2.
    IntSeries lhs1 = EtaQuotient().factor(48, 2).factor(24, -1).expand(precision);
    std::vector<char> is_odd_square_times3((std::size_t)precision, 0);
    for (std::int64_t m = 0; 3 * (2 * m + 1) * (2 * m + 1) < precision; ++m)
        is_odd_square_times3[(std::size_t)(3 * (2 * m + 1) * (2 * m + 1))] = 1;
    for (std::int64_t n = 0; n < precision; ++n) {
        report.count();
        int expected = is_odd_square_times3[(std::size_t)n];
        if (lhs1[n] != expected)
            report.fail(n, "identity 1 at exponent " + std::to_string(n) + ": lhs " +
                               lhs1[n].get_str() + ", rhs " + std::to_string(expected));
    }

    // Identity 2: eta(288z)^3/eta(96z), prefactor (3*288-96)/24 = 32, equals
    // sum c3(m) q^{96m+32} with c3 expanded independently in its own variable.
    IntSeries lhs2 = EtaQuotient().factor(288, 3).factor(96, -1).expand(precision);
    std::int64_t c3_prec = (precision - 32 + 95) / 96;
    IntSeries c3 = c3_series(std::max<std::int64_t>(c3_prec, 1));
    for (std::int64_t n = 0; n < precision; ++n) {
        report.count();
        const mpz_class* expected = nullptr;
        static const mpz_class zero = 0;
        if (n >= 32 && (n - 32) % 96 == 0) expected = &c3[(n - 32) / 96];
        else expected = &zero;
        if (lhs2[n] != *expected)
            report.fail(n, "identity 2 at exponent " + std::to_string(n) + ": lhs " +
                               lhs2[n].get_str() + ", rhs " + expected->get_str());
    }
    return report;
}

} // namespace sc6
