#include "closedforms.hpp"

#include "error.hpp"
#include "solver.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

namespace kgfrac::printed {

namespace {

double ex42_coefficient(double a, int k, double x) {
    const double s = std::sin(x);
    switch (k) {
        case 0: return 1.0 + s;
        case 1: return -std::tgamma(a) / std::tgamma(2 * a) * (1.0 + 3.0 * s + s * s);
        case 2:
            return -std::tgamma(a) / (2.0 * std::tgamma(3 * a)) *
                   (12.0 * std::cos(2 * x) - 25.0 * s + std::sin(3 * x) - 12.0);
        case 3: {
            const double g1 = std::tgamma(a);
            const double g2 = std::tgamma(2 * a);
            const double g3 = std::tgamma(3 * a);
            const double bracket =
                2.0 * g1 * g3 * (-3.0 + std::cos(2 * x) - 6.0 * s * s) +
                4.0 * g2 * g2 *
                    (49.0 - 98.0 * std::cos(2 * x) + std::cos(4 * x) + 111.0 * s - 23.0 * std::sin(3 * x));
            return -g1 / (8.0 * g2 * g2 * std::tgamma(4 * a)) * bracket;
        }
    }
    return 0.0;
}

double ex43_coefficient(double a, int k, double x) {
    const double sech = 1.0 / std::cosh(x);
    switch (k) {
        case 0: return -sech;
        case 1: return std::tgamma(a) / std::tgamma(2 * a) * std::pow(sech, 3);
        case 2: return std::tgamma(a) / std::tgamma(3 * a) * std::pow(sech, 5) * (4.0 * std::cosh(2 * x) - 5.0);
        case 3: {
            const double g1 = std::tgamma(a);
            const double g2 = std::tgamma(2 * a);
            const double g3 = std::tgamma(3 * a);
            const double bracket =
                (123.0 - 112.0 * std::cosh(2 * x) + 8.0 * std::cosh(4 * x)) * g2 * g2 - 3.0 * g1 * g3;
            return g1 / (g2 * g2 * std::tgamma(4 * a)) * std::pow(sech, 7) * bracket;
        }
    }
    return 0.0;
}

double ex44_coefficient(double a, int k, double x) {
    const double s = std::sin(x);
    switch (k) {
        case 0: return 1.0 + s;
        case 2: return -std::tgamma(a) / std::tgamma(3 * a) * (1.0 + 3.0 * s + s * s);
        case 4:
            return -std::tgamma(a) / (2.0 * std::tgamma(4 * a)) *
                   (12.0 * std::cos(2 * x) - 25.0 * s + std::sin(3 * x) - 12.0);
        case 6: {
            const double g1 = std::tgamma(a);
            const double g2 = std::tgamma(2 * a);
            const double g3 = std::tgamma(3 * a);
            const double bracket = 2.0 * g1 * g3 * (-3.0 + std::cos(2 * x) - 6.0 * s * s) +
                                   4.0 * g2 * g2 * (-12.0 + 12.0 * std::cos(2 * x) - 25.0 * s + std::sin(3 * x));
            return -g1 / (8.0 * g2 * g2 * std::tgamma(5 * a)) * bracket;
        }
        default: return 0.0;  // odd terms vanish
    }
}

double classical_alpha(BuiltinId id) { return id == BuiltinId::ex44 ? 2.0 : 1.0; }

}  // namespace

double alpha_symbol(BuiltinId id, double alpha_table) {
    return id == BuiltinId::ex44 ? alpha_table / 2.0 : alpha_table;
}

int max_index(BuiltinId id) {
    switch (id) {
        case BuiltinId::ex41: return INT_MAX;
        case BuiltinId::ex42:
        case BuiltinId::ex43: return 3;
        case BuiltinId::ex44: return 7;
    }
    return 0;
}

double coefficient(BuiltinId id, double alpha_table, int k, double x) {
    if (k < 0 || k > max_index(id))
        fail(ErrorKind::domain, "no printed U_" + std::to_string(k) + " for " + std::string(builtin_name(id)));
    if (!(alpha_table > 0.0)) fail(ErrorKind::domain, "alpha must be positive");
    const double a = alpha_symbol(id, alpha_table);
    switch (id) {
        case BuiltinId::ex41: return k == 0 ? 1.0 + std::sin(x) : 1.0 / std::tgamma(k * a + 1.0);
        case BuiltinId::ex42: return ex42_coefficient(a, k, x);
        case BuiltinId::ex43: return ex43_coefficient(a, k, x);
        case BuiltinId::ex44: return ex44_coefficient(a, k, x);
    }
    return 0.0;
}

double eval(BuiltinId id, double alpha_table, double x, double t, int n) {
    if (n < 0 || n > max_index(id))
        fail(ErrorKind::domain, "printed series of " + std::string(builtin_name(id)) + " has no term " +
                                    std::to_string(n));
    if (!(t >= 0.0)) fail(ErrorKind::domain, "printed series needs t >= 0");
    const double a = alpha_symbol(id, alpha_table);
    double acc = coefficient(id, alpha_table, 0, x);
    if (t == 0.0) return acc;
    const double log_t = std::log(t);
    for (int k = 1; k <= n; ++k) acc += coefficient(id, alpha_table, k, x) * std::exp(k * a * log_t);
    return acc;
}

double deviation_from_solver(BuiltinId id, double x, int kmax) {
    if (kmax < 0 || kmax > max_index(id))
        fail(ErrorKind::domain, "kmax outside the printed range of " + std::string(builtin_name(id)));
    const double alpha = classical_alpha(id);
    const SeriesSolution s = solve_frdtm(builtin_problem(id, alpha), x, std::max(kmax, 1));
    double worst = 0.0;
    for (int k = 0; k <= kmax; ++k)
        worst = std::max(worst, std::abs(coefficient(id, alpha, k, x) - s.seq[static_cast<std::size_t>(k)].value()));
    return worst;
}

}  // namespace kgfrac::printed
