#pragma once

#include "problem.hpp"
#include "transform.hpp"

#include <span>
#include <string>
#include <vector>

namespace kgfrac {

struct SolveOptions {
    // Extra jet orders kept on U_0 beyond the 2N the recurrence consumes.
    int jet_extra = 0;
};

struct SeriesSolution {
    CoeffSeq seq;
    ProblemSpec problem;
    int n_max;
    std::vector<std::string> warnings;
};

/// d2(U_k) + a U_k + b G_k + F_k for the canonical problem, with G_k the
/// k-th transformed coefficient of the nonlinearity.
Jet rhs_coefficient(const ProblemSpec& p, std::span<const Jet> u, int k);

/// Generates U_0..U_N at the site x0 by the fractional recurrence.
SeriesSolution solve_frdtm(const ProblemSpec& p, double x0, int n_max, SolveOptions options = {});

/// sum_{k<=N} U_k(x0) (t - t0)^(k beta)
double eval_series(const SeriesSolution& s, double t);
/// Same, truncated after index n.
double eval_series_partial(const SeriesSolution& s, double t, int n);

/// Independent solves per x, evaluated at every t. Row-major with x as the
/// slow index: out[i * ts.size() + j] = u(xs[i], ts[j]).
std::vector<double> eval_grid(const ProblemSpec& p, std::span<const double> xs, std::span<const double> ts,
                              int n_max, unsigned threads = 1);

}  // namespace kgfrac
