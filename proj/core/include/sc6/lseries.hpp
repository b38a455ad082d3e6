#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc6 {

// A numerically evaluated L-value with an explicit truncation-error bound.
struct LValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
    std::int64_t terms_used = 0;
};

class LSeriesError : public std::runtime_error {
public:
    enum class Kind { sign_unresolved, insufficient_terms };
    LSeriesError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// L(chi_D, 1) through the class number formula 2 pi h(D) / (w sqrt(|D|)).
// The error bound reflects floating rounding only; h and w are exact.
LValue dirichlet_L1(std::int64_t D);

// Conductor of the quadratic twist of the level-24 curve by chi_{-N} for
// squarefree N coprime to 6: base conductor times the square of the odd
// part of the twisting discriminant, i.e. 24 N^2.
std::int64_t conductor_twist(std::int64_t N);

// Central value L(F tensor chi_{-N}, 1) by the smoothed two-sided sum
//   sum_m (A_psi(m)/m) (exp(-2 pi m T / sqrt(q)) + eps exp(-2 pi m / (T sqrt(q))))
// with A_psi(m) = (-N|m) A(m) and q = 24 N^2. The root number eps is
// resolved empirically by comparing evaluations at two T parameters
// (a third arbitrates); throws LSeriesError when it cannot be pinned down
// or the coefficient budget is exceeded.
LValue twisted_modular_L1(std::int64_t N, double tolerance);

// Same, also reporting the resolved functional-equation sign.
LValue twisted_modular_L1(std::int64_t N, double tolerance, int& sign_out);

struct WaldspurgerRow {
    std::int64_t N = 0;
    std::int64_t c4 = 0;      // 4 a_C(N)
    double lvalue = 0.0;
    double rho = 0.0;         // a_C(N)^2 / (sqrt(N) L)
    double d_emp = 0.0;       // |a_C(N)| / (N^{1/4} L^{1/2}) = sqrt(rho)
};

// Constancy report of the Waldspurger ratio across one local square class.
// N with unresolved L-value signs are skipped and listed.
struct WaldspurgerReport {
    std::vector<WaldspurgerRow> rows;
    std::vector<std::int64_t> skipped;
    double median_rho = 0.0;
    double max_rel_deviation = 0.0;
};

WaldspurgerReport waldspurger_ratio_check(std::span<const std::int64_t> N_list,
                                          double tolerance = 1e-7);

// Unique N* with (a sqrt(b) / (d pi)) N^{1/4} = c_up N^{e_up}, by bisection
// in log space to relative precision 1e-12. Requires e_up < 1/4.
double positivity_threshold(double a, double b, double d, double c_up, double e_up);

} // namespace sc6
