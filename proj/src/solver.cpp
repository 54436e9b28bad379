#include "solver.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace kgfrac {

namespace {

// k-th coefficient of sum_p c_p U^p via the running powers U^p.
Jet poly_coefficient(std::span<const Jet> u, const std::vector<double>& c, int k, int order) {
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    std::vector<Jet> power(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    for (Jet& j : power) j = j.truncated(order);
    const std::vector<Jet> base = power;
    Jet acc = power[static_cast<std::size_t>(k)] * c[0];
    for (std::size_t p = 1; p < c.size(); ++p) {
        std::vector<Jet> next;
        next.reserve(n);
        for (int r = 0; r <= k; ++r) next.push_back(seq_conv(power, base, r));
        power = std::move(next);
        if (c[p] != 0.0) acc += power[static_cast<std::size_t>(k)] * c[p];
    }
    return acc;
}

}  // namespace

Jet rhs_coefficient(const ProblemSpec& p, std::span<const Jet> u, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= u.size())
        fail(ErrorKind::structural, "rhs_coefficient index " + std::to_string(k) + " out of range");
    const Jet& uk = u[static_cast<std::size_t>(k)];
    if (uk.order() < 2)
        fail(ErrorKind::insufficient_order,
             "U_" + std::to_string(k) + " has jet order " + std::to_string(uk.order()) +
                 "; seed U_0 with order >= " + std::to_string(2 * (k + 1)) + " to advance past index " +
                 std::to_string(k));
    Jet out = uk.d2();
    const int order = out.order();
    if (p.a != 0.0) out += uk.truncated(order) * p.a;
    if (p.b != 0.0) {
        switch (p.g.kind) {
            case NonlinearityKind::none: break;
            case NonlinearityKind::square: out += seq_conv(u, u, k).truncated(order) * p.b; break;
            case NonlinearityKind::cube: out += seq_conv3(u, k).truncated(order) * p.b; break;
            case NonlinearityKind::poly: out += poly_coefficient(u, p.g.poly, k, order).truncated(order) * p.b; break;
        }
    }
    for (const SourceTerm& s : p.source)
        if (s.t_index == k) out += jet_power_of_x(s.x_power, uk.base_point(), order) * s.coeff;
    return out;
}

SeriesSolution solve_frdtm(const ProblemSpec& p, double x0, int n_max, SolveOptions options) {
    if (n_max < 1) fail(ErrorKind::domain, "truncation order N must be at least 1");
    if (options.jet_extra < 0) fail(ErrorKind::domain, "extra jet order must be nonnegative");
    p.validate();
    const FracOrder& order = p.order;
    const int seed_order = 2 * n_max + options.jet_extra;
    auto slot_order = [&](int k) { return seed_order - 2 * k; };

    std::vector<std::string> warnings;
    std::vector<Jet> u;
    u.reserve(static_cast<std::size_t>(n_max) + 1);
    u.push_back(p.g0.jet(x0, seed_order));

    const int step = order.ic_count();
    if (step == 2) {
        Jet u1 = Jet::zero(x0, slot_order(1));
        if (!p.g1.is_zero()) {
            if (order.beta() == 1.0) {
                u1 = p.g1.jet(x0, slot_order(1));
            } else if (p.allow_fractional_g1) {
                u1 = p.g1.jet(x0, slot_order(1)) * (1.0 / gamma_fn(order.beta() + 1.0));
            } else {
                fail(ErrorKind::config,
                     "nonzero g1 with 1 < mu < 2 has no validated seeding; set allow_fractional_g1 to seed "
                     "U_1 = g1 / Gamma(beta + 1)");
            }
        }
        u.push_back(std::move(u1));
    }

    bool underflow_reported = false;
    for (int k = 0; static_cast<int>(u.size()) <= n_max; ++k) {
        const double ratio = ratio_standard(order, k, step);
        const int target = static_cast<int>(u.size());
        const Jet rhs = rhs_coefficient(p, u, k);
        Jet next = (rhs * ratio).truncated(slot_order(target));
        if (!underflow_reported && rhs.value() != 0.0 && std::abs(next.value()) < std::numeric_limits<double>::min()) {
            warnings.push_back("coefficients underflow to zero from index " + std::to_string(target) +
                               "; terms beyond it carry no information");
            underflow_reported = true;
        }
        u.push_back(std::move(next));
    }

    return SeriesSolution{CoeffSeq(order, 0.0, std::move(u)), p, n_max, std::move(warnings)};
}

double eval_series_partial(const SeriesSolution& s, double t, int n) {
    if (n < 0 || n > s.n_max)
        fail(ErrorKind::domain, "partial sum index " + std::to_string(n) + " outside 0.." + std::to_string(s.n_max));
    const double tau = t - s.seq.t0();
    if (!(tau >= 0.0)) fail(ErrorKind::domain, "series evaluation needs t >= t0");
    const double beta = s.seq.order().beta();
    double acc = s.seq[0].value();
    if (tau == 0.0) return acc;
    const double log_tau = std::log(tau);
    for (int k = 1; k <= n; ++k) acc += s.seq[static_cast<std::size_t>(k)].value() * std::exp(k * beta * log_tau);
    return acc;
}

double eval_series(const SeriesSolution& s, double t) { return eval_series_partial(s, t, s.n_max); }

std::vector<double> eval_grid(const ProblemSpec& p, std::span<const double> xs, std::span<const double> ts,
                              int n_max, unsigned threads) {
    for (double t : ts)
        if (!(t >= 0.0)) fail(ErrorKind::domain, "grid times must be nonnegative");
    const std::size_t nx = xs.size();
    const std::size_t nt = ts.size();
    std::vector<double> out(nx * nt);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const SeriesSolution s = solve_frdtm(p, xs[i], n_max);
            for (std::size_t j = 0; j < nt; ++j) out[i * nt + j] = eval_series(s, ts[j]);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(nx, 1));
    if (workers == 1) {
        work(0, nx);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (nx + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(nx, w * chunk);
            const std::size_t end = std::min(nx, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace kgfrac
