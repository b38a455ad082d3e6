#include "sc6/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sc6/arith.hpp"
#include "sc6/binaryqf.hpp"
#include "sc6/modforms.hpp"

namespace sc6 {

namespace {
constexpr double kPi = std::numbers::pi;
}

LValue dirichlet_L1(std::int64_t D) {
    BinaryFormClassData data = class_data(D); // validates D
    double value = 2.0 * kPi * (double)data.h / ((double)data.w * std::sqrt((double)-D));
    return LValue{value, 8.0 * std::numeric_limits<double>::epsilon() * value, data.h};
}

std::int64_t conductor_twist(std::int64_t N) {
    if (N < 1 || gcd64(N, 6) != 1 || !is_squarefree(N))
        throw std::invalid_argument("conductor_twist: N must be squarefree and coprime to 6");
    // chi_{-N} has discriminant -N (N = 3 mod 4) or -4N; the odd part is N
    // either way, and the 2-part stays with the base conductor 24.
    std::int64_t odd_part = N; // N is odd since gcd(N, 6) = 1
    std::int64_t cond = 24 * odd_part * odd_part;
    if (cond != 24 * N * N) throw std::logic_error("conductor_twist: formula mismatch");
    return cond;
}

namespace {

struct SmoothedSum {
    double at(double T, int eps) const {
        // Index i holds the m = i+1 term split into its two exponentials.
        double sum = 0.0;
        for (std::size_t i = 0; i < coeff.size(); ++i)
            sum += term(i, T) + (double)eps * term(i, 1.0 / T);
        return sum;
    }
    double term(std::size_t i, double T) const {
        return coeff[i] * std::exp(-decay * (double)(i + 1) * T);
    }
    std::vector<double> coeff; // A_psi(m)/m
    double decay = 0.0;        // 2 pi / sqrt(q)
};

// Truncation tail of the smoothed sum, using |A_psi(m)| <= d(m) sqrt(m)
// and d(m) <= 2 sqrt(m): each term is at most 2 e^{-alpha m}, summed as a
// geometric series.
double tail_bound(double alpha, std::int64_t M) {
    double r = std::exp(-alpha);
    return 2.0 * std::pow(r, (double)(M + 1)) / (1.0 - r);
}

} // namespace

LValue twisted_modular_L1(std::int64_t N, double tolerance, int& sign_out) {
    if (tolerance <= 0) throw std::invalid_argument("twisted_modular_L1: tolerance must be positive");
    const std::int64_t q = conductor_twist(N);
    const double sqrtq = std::sqrt((double)q);
    const double decay = 2.0 * kPi / sqrtq;
    const double t_lo = 1.0, t_mid = 1.1, t_hi = 1.3;

    // Terms needed so that both exponentials' tails stay under tolerance/2
    // at the slowest decay rate used (T = t_hi on the 1/T side).
    const double alpha_min = decay / t_hi;
    std::int64_t M = 1;
    while (tail_bound(alpha_min, M) > tolerance / 2) {
        M *= 2;
        if (M > (1LL << 40)) throw LSeriesError(LSeriesError::Kind::insufficient_terms,
                                                "twisted_modular_L1: tail does not close");
    }
    for (std::int64_t lo = M / 2; lo + 1 < M;) { // smallest M whose tail closes
        std::int64_t mid = (lo + M) / 2;
        (tail_bound(alpha_min, mid) <= tolerance / 2 ? M : lo) = mid;
    }
    const std::int64_t budget =
        (std::int64_t)std::ceil(8.0 * sqrtq / (2.0 * kPi) * std::log(1.0 / tolerance)) + 16;
    if (M > budget)
        throw LSeriesError(LSeriesError::Kind::insufficient_terms,
                           "twisted_modular_L1: coefficient budget exceeded");

    SmoothedSum sum;
    sum.decay = decay;
    sum.coeff.resize((std::size_t)M);
    auto an = eigenform_table(M);
    for (std::int64_t m = 1; m <= M; ++m)
        sum.coeff[(std::size_t)(m - 1)] =
            (double)(kronecker(-N, m) * an[(std::size_t)m]) / (double)m;

    const double tail = tail_bound(alpha_min, M);
    auto deviation = [&](int eps) {
        return std::abs(sum.at(t_lo, eps) - sum.at(t_mid, eps));
    };
    double dev_plus = deviation(+1), dev_minus = deviation(-1);
    int eps = 0;
    if (dev_plus <= tolerance && dev_minus > 3 * tolerance) eps = +1;
    else if (dev_minus <= tolerance && dev_plus > 3 * tolerance) eps = -1;
    else {
        // Arbitrate with a third parameter: the true sign is T-independent.
        auto spread3 = [&](int e) {
            double v1 = sum.at(t_lo, e), v2 = sum.at(t_mid, e), v3 = sum.at(t_hi, e);
            return std::max({std::abs(v1 - v2), std::abs(v1 - v3), std::abs(v2 - v3)});
        };
        double s_plus = spread3(+1), s_minus = spread3(-1);
        if (s_plus <= tolerance && s_minus > 3 * tolerance) eps = +1;
        else if (s_minus <= tolerance && s_plus > 3 * tolerance) eps = -1;
        else
            throw LSeriesError(LSeriesError::Kind::sign_unresolved,
                               "twisted_modular_L1: functional-equation sign unresolved for N=" +
                                   std::to_string(N));
    }

    double v1 = sum.at(t_lo, eps), v2 = sum.at(t_mid, eps);
    sign_out = eps;
    return LValue{(v1 + v2) / 2.0, tail + std::abs(v1 - v2), M};
}

LValue twisted_modular_L1(std::int64_t N, double tolerance) {
    int sign = 0;
    return twisted_modular_L1(N, tolerance, sign);
}

WaldspurgerReport waldspurger_ratio_check(std::span<const std::int64_t> N_list,
                                          double tolerance) {
    if (N_list.empty()) throw std::invalid_argument("waldspurger_ratio_check: empty list");
    std::int64_t max_N = *std::max_element(N_list.begin(), N_list.end());
    GenusDecomposition d = decompose(max_N);

    WaldspurgerReport report;
    for (std::int64_t N : N_list) {
        if (N < 35 || (N - 35) % 24 != 0 || !is_squarefree(N))
            throw std::invalid_argument("waldspurger_ratio_check: N must be squarefree of the form 24n+35");
        std::int64_t c4 = d.c4[(std::size_t)N];
        if (c4 == 0)
            throw std::invalid_argument("waldspurger_ratio_check: a_C(N) = 0 for N=" +
                                        std::to_string(N));
        try {
            LValue L = twisted_modular_L1(N, tolerance);
            double ac = (double)c4 / 4.0;
            double rho = ac * ac / (std::sqrt((double)N) * L.value);
            report.rows.push_back({N, c4, L.value, rho, std::sqrt(rho)});
        } catch (const LSeriesError& e) {
            if (e.kind() != LSeriesError::Kind::sign_unresolved) throw;
            report.skipped.push_back(N);
        }
    }
    if (report.rows.empty()) return report;

    std::vector<double> rhos;
    for (const auto& row : report.rows) rhos.push_back(row.rho);
    std::sort(rhos.begin(), rhos.end());
    std::size_t mid = rhos.size() / 2;
    report.median_rho =
        rhos.size() % 2 == 1 ? rhos[mid] : (rhos[mid - 1] + rhos[mid]) / 2.0;
    for (const auto& row : report.rows)
        report.max_rel_deviation = std::max(
            report.max_rel_deviation, std::abs(row.rho - report.median_rho) / report.median_rho);
    return report;
}

double positivity_threshold(double a, double b, double d, double c_up, double e_up) {
    if (a <= 0 || b <= 0 || d <= 0 || c_up <= 0)
        throw std::invalid_argument("positivity_threshold: constants must be positive");
    if (e_up >= 0.25)
        throw std::invalid_argument("positivity_threshold: no crossing when e_up >= 1/4");
    const double k = a * std::sqrt(b) / (d * kPi);
    // g(log N) = log k + log(N)/4 - log c_up - e_up log N is increasing in
    // log N; bracket the root and bisect.
    auto g = [&](double logN) { return std::log(k) + 0.25 * logN - std::log(c_up) - e_up * logN; };
    double lo = 0.0, hi = 1.0;
    while (g(lo) > 0) lo -= 16.0;
    while (g(hi) < 0) hi += 16.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13; ++i) {
        double mid = (lo + hi) / 2.0;
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return std::exp((lo + hi) / 2.0);
}

} // namespace sc6
