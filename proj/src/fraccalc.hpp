#pragma once

#include <optional>
#include <vector>

namespace kgfrac {

/// Time-fractional order mu of the PDE together with the exponent step of
/// its series. One initial condition (mu <= 1) gives beta = mu; two initial
/// conditions (1 < mu <= 2) give beta = mu / 2.
class FracOrder {
public:
    static FracOrder from_mu(double mu);

    double mu() const noexcept { return mu_; }
    double beta() const noexcept { return beta_; }
    int ic_count() const noexcept { return ic_count_; }

    friend bool operator==(const FracOrder&, const FracOrder&) = default;

private:
    FracOrder(double mu, double beta, int ic_count) : mu_(mu), beta_(beta), ic_count_(ic_count) {}

    double mu_;
    double beta_;
    int ic_count_;
};

/// Gamma function for x > 0. Integer arguments return factorials.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) without intermediate overflow.
double gamma_ratio(double a, double b);

/// Gamma(beta k + 1) / Gamma(beta (k + step) + 1), the factor that advances
/// the transformed coefficients by `step` slots.
double ratio_standard(const FracOrder& order, int k, int step);

/// coeff * t^exponent
struct Monomial {
    double coeff;
    double exponent;
};

/// Riemann-Liouville integral of order alpha applied to t^gamma_exp.
Monomial rl_integral_monomial(double alpha, double gamma_exp);

/// Caputo derivative of order alpha applied to t^gamma_exp. Empty when the
/// monomial is part of the polynomial kernel annihilated by the m-th
/// derivative, m = ceil(alpha).
///
/// Non-integer exponents below m - 1 have an unbounded derivative of order
/// m - 1 at t = 0 and are rejected with a domain error.
std::optional<Monomial> caputo_monomial(double alpha, double gamma_exp);

/// Checks J^mu D^mu t^g = t^g - sum_{k<m} (d^k/dt^k t^g)(0) t^k / k! and
/// D^mu J^mu t^g = t^g on a single monomial.
bool verify_theorem1(const FracOrder& order, double gamma_exp, double tol);

}  // namespace kgfrac
