#pragma once

#include "problem.hpp"

namespace kgfrac {

/// Coefficient formulas exactly as printed for the four worked examples,
/// used as an oracle independent of the recurrence engine.
///
/// The printed formulas carry the symbol alpha. For ex41..ex43 that symbol
/// is the table's alpha; for ex44 it is half of it, alpha_sym = alpha / 2,
/// with exponents t^(k alpha_sym). Only this reading reproduces the ex44
/// tables numerically.
namespace printed {

double alpha_symbol(BuiltinId id, double alpha_table);

/// Largest index with a printed formula (ex41 has a closed general term).
int max_index(BuiltinId id);

/// Printed U_k(x).
double coefficient(BuiltinId id, double alpha_table, int k, double x);

/// sum_{k<=n} U_k(x) t^(k alpha_sym)
double eval(BuiltinId id, double alpha_table, double x, double t, int n);

/// max_{k<=kmax} |printed U_k(x) - recurrence U_k(x)| at the classical order
/// (alpha = 1 for ex41..ex43, alpha = 2 for ex44).
double deviation_from_solver(BuiltinId id, double x, int kmax);

}  // namespace printed

}  // namespace kgfrac
