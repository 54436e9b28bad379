#include "fraccalc.hpp"

#include "error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kgfrac {

namespace {

// Largest n with n! finite in double precision.
constexpr int kMaxFactorialArg = 170;

bool is_integer(double v) { return std::isfinite(v) && std::nearbyint(v) == v; }

double factorial(int n) {
    long double acc = 1.0L;
    for (int i = 2; i <= n; ++i) acc *= static_cast<long double>(i);
    return static_cast<double>(acc);
}

}  // namespace

FracOrder FracOrder::from_mu(double mu) {
    if (!(mu > 0.0 && mu <= 2.0))
        fail(ErrorKind::domain, "fractional order mu must lie in (0, 2], got " + std::to_string(mu));
    if (mu <= 1.0) return FracOrder(mu, mu, 1);
    return FracOrder(mu, mu / 2.0, 2);
}

double gamma_fn(double x) {
    if (!(x > 0.0)) fail(ErrorKind::domain, "gamma_fn requires x > 0, got " + std::to_string(x));
    if (is_integer(x) && x <= kMaxFactorialArg + 1) return factorial(static_cast<int>(x) - 1);
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) fail(ErrorKind::domain, "log_gamma requires x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

double gamma_ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) fail(ErrorKind::domain, "gamma_ratio requires positive arguments");
    const double gap = b - a;
    // Integer gap: Gamma(b) = Gamma(a) * a (a+1) ... (b-1), a short exact-ish product.
    if (is_integer(gap) && std::abs(gap) <= 64.0) {
        const int m = static_cast<int>(std::abs(gap));
        const double lo = gap >= 0 ? a : b;
        double prod = 1.0;
        for (int j = 0; j < m; ++j) prod *= lo + j;
        return gap >= 0 ? 1.0 / prod : prod;
    }
    if (a <= kMaxFactorialArg && b <= kMaxFactorialArg) return gamma_fn(a) / gamma_fn(b);
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

double ratio_standard(const FracOrder& order, int k, int step) {
    if (k < 0) fail(ErrorKind::domain, "ratio_standard requires k >= 0");
    if (step != 1 && step != 2) fail(ErrorKind::domain, "ratio_standard step must be 1 or 2");
    const double beta = order.beta();
    return gamma_ratio(beta * k + 1.0, beta * (k + step) + 1.0);
}

Monomial rl_integral_monomial(double alpha, double gamma_exp) {
    if (!(alpha >= 0.0)) fail(ErrorKind::domain, "integral order must be nonnegative");
    if (!(gamma_exp > -1.0))
        fail(ErrorKind::domain, "integral of t^g diverges for g <= -1 (g = " + std::to_string(gamma_exp) + ")");
    if (alpha == 0.0) return {1.0, gamma_exp};
    return {gamma_ratio(gamma_exp + 1.0, alpha + gamma_exp + 1.0), alpha + gamma_exp};
}

std::optional<Monomial> caputo_monomial(double alpha, double gamma_exp) {
    if (!(alpha > 0.0)) fail(ErrorKind::domain, "derivative order must be positive");
    if (!(gamma_exp >= 0.0)) fail(ErrorKind::domain, "monomial exponent must be nonnegative");
    const int m = static_cast<int>(std::ceil(alpha));
    if (is_integer(gamma_exp) && gamma_exp < m) return std::nullopt;
    if (!is_integer(gamma_exp) && gamma_exp - m <= -1.0)
        fail(ErrorKind::domain, "t^" + std::to_string(gamma_exp) + " lacks " + std::to_string(m - 1) +
                                    " bounded derivatives at t = 0");

    // m-th classical derivative: g (g-1) ... (g-m+1) t^(g-m)
    double falling = 1.0;
    for (int j = 0; j < m; ++j) falling *= gamma_exp - j;
    const Monomial rest = rl_integral_monomial(m - alpha, gamma_exp - m);
    return Monomial{falling * rest.coeff, rest.exponent};
}

bool verify_theorem1(const FracOrder& order, double gamma_exp, double tol) {
    if (!(tol > 0.0)) fail(ErrorKind::domain, "tolerance must be positive");
    const double alpha = order.mu();
    const int m = static_cast<int>(std::ceil(alpha));

    // J D u plus the Taylor polynomial of the initial data.
    std::vector<Monomial> recovered;
    if (const auto d = caputo_monomial(alpha, gamma_exp)) {
        const Monomial j = rl_integral_monomial(alpha, d->exponent);
        recovered.push_back({d->coeff * j.coeff, j.exponent});
    }
    if (is_integer(gamma_exp) && gamma_exp < m) recovered.push_back({1.0, gamma_exp});

    double coeff_at_gamma = 0.0;
    for (const Monomial& term : recovered) {
        if (std::abs(term.exponent - gamma_exp) <= tol)
            coeff_at_gamma += term.coeff;
        else if (std::abs(term.coeff) > tol)
            return false;
    }
    if (std::abs(coeff_at_gamma - 1.0) > tol) return false;

    // D J u
    const Monomial j = rl_integral_monomial(alpha, gamma_exp);
    const auto d = caputo_monomial(alpha, j.exponent);
    if (!d) return false;
    return std::abs(j.coeff * d->coeff - 1.0) <= tol && std::abs(d->exponent - gamma_exp) <= tol;
}

}  // namespace kgfrac
