#pragma once

#include "fraccalc.hpp"
#include "jet.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgfrac {

/// Building blocks of initial data: coeff * f(x)^power.
enum class Basis { one, x, sin, cos, exp, sech };

struct ElementaryTerm {
    double coeff = 1.0;
    Basis fn = Basis::one;
    int power = 1;
};

/// Sum of elementary terms, e.g. "1 + sin(x)" or "-sech(x)" or "0.5*x^2".
class InitialData {
public:
    InitialData() = default;
    explicit InitialData(std::vector<ElementaryTerm> terms) : terms_(std::move(terms)) {}

    /// Parses "term (+|-) term ...", term = [number '*'] f ['^' int] | number,
    /// f in {x, sin(x), cos(x), exp(x), sech(x)}.
    static InitialData parse(std::string_view text);

    Jet jet(double x0, int order) const;
    double eval(double x) const;
    bool is_zero() const noexcept;
    std::span<const ElementaryTerm> terms() const noexcept { return terms_; }
    std::string to_string() const;

private:
    std::vector<ElementaryTerm> terms_;
};

enum class NonlinearityKind { none, square, cube, poly };

/// G(u). For poly, G(u) = sum_p c_p u^p with coefficients c_1..c_P.
struct Nonlinearity {
    NonlinearityKind kind = NonlinearityKind::none;
    std::vector<double> poly;

    /// Equivalent polynomial coefficients c_1..c_P.
    std::vector<double> coefficients() const;
    double eval(double u) const;
    double derivative(double u) const;
};

/// coeff * x^x_power * t^(t_index beta)
struct SourceTerm {
    double coeff = 0.0;
    int x_power = 0;
    int t_index = 0;
};

enum class BuiltinId { ex41, ex42, ex43, ex44 };

std::optional<BuiltinId> builtin_from_name(std::string_view name);
std::string_view builtin_name(BuiltinId id);

/// D_t^mu u = u_xx + a u + b G(u) + f, u(x, 0) = g0(x), u_t(x, 0) = g1(x).
struct ProblemSpec {
    FracOrder order = FracOrder::from_mu(1.0);
    double a = 0.0;
    double b = 0.0;
    Nonlinearity g;
    std::vector<SourceTerm> source;
    InitialData g0;
    InitialData g1;
    // Seed U_1 = g1 / Gamma(beta + 1) for 1 < mu < 2; off unless requested.
    bool allow_fractional_g1 = false;

    void validate() const;
    /// f at (x, t) with t^(n beta) evaluated at the problem's beta.
    double source_value(double x, double t) const;
};

/// The worked examples, with their order set from alpha. The admissible
/// alpha range is (0, 1] for ex41..ex43 and (1, 2] for ex44.
ProblemSpec builtin_problem(BuiltinId id, double alpha);
bool builtin_alpha_admissible(BuiltinId id, double alpha);

}  // namespace kgfrac
