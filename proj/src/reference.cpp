#include "reference.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

namespace kgfrac {

Grid1D::Grid1D(double lo, double hi, int cells, Boundary boundary)
    : lo_(lo), hi_(hi), cells_(cells), h_(0.0), boundary_(boundary) {
    if (cells < 4) fail(ErrorKind::config, "grid needs at least 4 cells");
    h_ = (hi - lo) / cells;
    if (!(h_ > 0.0)) fail(ErrorKind::config, "grid requires hi > lo");
}

std::size_t Grid1D::node_count() const noexcept {
    return static_cast<std::size_t>(cells_) + (boundary_ == Boundary::periodic ? 0 : 1);
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> out(node_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = node(i);
    return out;
}

std::optional<std::size_t> Grid1D::node_index(double x) const {
    double s = (x - lo_) / h_;
    if (boundary_ == Boundary::periodic) s -= cells_ * std::floor(s / cells_);
    const double r = std::nearbyint(s);
    if (std::abs(s - r) > 1e-9) return std::nullopt;
    long idx = static_cast<long>(r);
    if (boundary_ == Boundary::periodic) return static_cast<std::size_t>(idx % cells_);
    if (idx < 0 || idx > cells_) return std::nullopt;
    return static_cast<std::size_t>(idx);
}

double Grid1D::sample(std::span<const double> u, double x) const {
    if (u.size() != node_count()) fail(ErrorKind::structural, "sample: vector length does not match grid");
    if (const auto idx = node_index(x)) return u[*idx];
    double s = (x - lo_) / h_;
    const long n = static_cast<long>(node_count());
    if (boundary_ == Boundary::periodic) {
        s -= cells_ * std::floor(s / cells_);
    } else if (s < 0.0 || s > cells_) {
        fail(ErrorKind::domain, "sample point " + std::to_string(x) + " lies outside the grid");
    }
    long base = static_cast<long>(std::floor(s)) - 1;
    if (boundary_ != Boundary::periodic) base = std::clamp(base, 0L, n - 4);
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double w = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) w *= (s - static_cast<double>(base + j)) / static_cast<double>(i - j);
        const long idx = boundary_ == Boundary::periodic ? ((base + i) % n + n) % n : base + i;
        acc += w * u[static_cast<std::size_t>(idx)];
    }
    return acc;
}

std::vector<double> laplacian(const Grid1D& grid, std::span<const double> u) {
    const std::size_t n = grid.node_count();
    if (u.size() != n)
        fail(ErrorKind::structural, "laplacian: vector of length " + std::to_string(u.size()) +
                                        " on a grid with " + std::to_string(n) + " nodes");
    const double inv_h2 = 1.0 / (grid.h() * grid.h());
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_h2;
    if (grid.boundary() == Boundary::periodic) {
        out[0] = (u[n - 1] - 2.0 * u[0] + u[1]) * inv_h2;
        out[n - 1] = (u[n - 2] - 2.0 * u[n - 1] + u[0]) * inv_h2;
    }
    return out;
}

MethodOfLines::MethodOfLines(ProblemSpec problem, Grid1D grid)
    : problem_(std::move(problem)), grid_(grid), second_order_(false), x_(grid.nodes()) {
    problem_.validate();
    const double mu = problem_.order.mu();
    if (mu == 1.0)
        second_order_ = false;
    else if (mu == 2.0)
        second_order_ = true;
    else
        fail(ErrorKind::domain, "the reference integrator handles mu = 1 and mu = 2 only");
    if (grid_.boundary() == Boundary::periodic) {
        const double left = problem_.g0.eval(grid_.lo());
        const double right = problem_.g0.eval(grid_.hi());
        if (std::abs(left - right) > 1e-12)
            fail(ErrorKind::config, "periodic grid needs g0(lo) = g0(hi)");
    }
}

std::size_t MethodOfLines::dimension() const { return grid_.node_count() * (second_order_ ? 2 : 1); }

std::vector<double> MethodOfLines::initial_state() const {
    const std::size_t n = grid_.node_count();
    std::vector<double> y(dimension(), 0.0);
    for (std::size_t i = 0; i < n; ++i) y[i] = problem_.g0.eval(x_[i]);
    if (second_order_)
        for (std::size_t i = 0; i < n; ++i) y[n + i] = problem_.g1.eval(x_[i]);
    return y;
}

void MethodOfLines::rhs(double t, std::span<const double> y, std::span<double> dydt) const {
    const std::size_t n = grid_.node_count();
    const std::span<const double> u = y.first(n);
    const std::vector<double> lap = laplacian(grid_, u);
    const bool frozen = grid_.boundary() == Boundary::dirichlet_frozen;
    const bool has_source = !problem_.source.empty();
    std::span<double> force = second_order_ ? dydt.subspan(n, n) : dydt.first(n);
    for (std::size_t i = 0; i < n; ++i) {
        double f = lap[i] + problem_.a * u[i] + problem_.b * problem_.g.eval(u[i]);
        if (has_source) f += problem_.source_value(x_[i], t);
        force[i] = f;
    }
    if (second_order_)
        for (std::size_t i = 0; i < n; ++i) dydt[i] = y[n + i];
    if (frozen) {
        force[0] = force[n - 1] = 0.0;
        if (second_order_) dydt[0] = dydt[n - 1] = 0.0;
    }
}

Eigen::SparseMatrix<double> MethodOfLines::jacobian(double, std::span<const double> y) const {
    const std::size_t n = grid_.node_count();
    const bool frozen = grid_.boundary() == Boundary::dirichlet_frozen;
    const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
    const Eigen::Index offset = second_order_ ? static_cast<Eigen::Index>(n) : 0;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(n * 4);
    for (std::size_t i = 0; i < n; ++i) {
        const bool boundary_node = frozen && (i == 0 || i == n - 1);
        const Eigen::Index row = offset + static_cast<Eigen::Index>(i);
        if (second_order_ && !boundary_node)
            trip.emplace_back(static_cast<Eigen::Index>(i), offset + static_cast<Eigen::Index>(i), 1.0);
        if (boundary_node) continue;
        const std::size_t left = i == 0 ? n - 1 : i - 1;
        const std::size_t right = i == n - 1 ? 0 : i + 1;
        const double diag = -2.0 * inv_h2 + problem_.a + problem_.b * problem_.g.derivative(y[i]);
        trip.emplace_back(row, static_cast<Eigen::Index>(i), diag);
        trip.emplace_back(row, static_cast<Eigen::Index>(left), inv_h2);
        trip.emplace_back(row, static_cast<Eigen::Index>(right), inv_h2);
    }
    const auto dim = static_cast<Eigen::Index>(dimension());
    Eigen::SparseMatrix<double> jac(dim, dim);
    jac.setFromTriplets(trip.begin(), trip.end());
    return jac;
}

namespace {

// Gauss-Legendre, two stages.
const double kSqrt3 = std::numbers::sqrt3;
const double kA[2][2] = {{0.25, 0.25 - kSqrt3 / 6.0}, {0.25 + kSqrt3 / 6.0, 0.25}};
const double kC[2] = {0.5 - kSqrt3 / 6.0, 0.5 + kSqrt3 / 6.0};

// d = b^T A^{-1}, so y_next = y + d_1 Z_1 + d_2 Z_2.
struct UpdateWeights {
    double d[2];
    UpdateWeights() {
        const double det = kA[0][0] * kA[1][1] - kA[0][1] * kA[1][0];
        const double inv[2][2] = {{kA[1][1] / det, -kA[0][1] / det}, {-kA[1][0] / det, kA[0][0] / det}};
        d[0] = 0.5 * (inv[0][0] + inv[1][0]);
        d[1] = 0.5 * (inv[0][1] + inv[1][1]);
    }
};
const UpdateWeights kWeights;

}  // namespace

GaussLegendre2::GaussLegendre2(const OdeSystem& system, NewtonSettings settings)
    : system_(system), settings_(settings) {}

void GaussLegendre2::factor(double t, std::span<const double> y, double dt) {
    const auto n = static_cast<Eigen::Index>(system_.dimension());
    const Eigen::SparseMatrix<double> jac = system_.jacobian(t, y);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(jac.nonZeros()) * 4 + static_cast<std::size_t>(2 * n));
    for (Eigen::Index i = 0; i < 2 * n; ++i) trip.emplace_back(i, i, 1.0);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const double s = -dt * kA[bi][bj];
            for (Eigen::Index col = 0; col < jac.outerSize(); ++col)
                for (Eigen::SparseMatrix<double>::InnerIterator it(jac, col); it; ++it)
                    trip.emplace_back(bi * n + it.row(), bj * n + it.col(), s * it.value());
        }
    Eigen::SparseMatrix<double> m(2 * n, 2 * n);
    m.setFromTriplets(trip.begin(), trip.end());
    m.makeCompressed();
    lu_.compute(m);
    if (lu_.info() != Eigen::Success) fail(ErrorKind::numerical, "Newton iteration matrix is singular");
    factored_dt_ = dt;
}

bool GaussLegendre2::solve_stages(double t, std::span<const double> y, double dt, StepReport& report) {
    const std::size_t n = system_.dimension();
    z_.assign(2 * n, 0.0);
    std::vector<double> stage(n), f0(n), f1(n);
    Eigen::VectorXd residual(static_cast<Eigen::Index>(2 * n));
    for (int iter = 1; iter <= settings_.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + z_[i];
        system_.rhs(t + kC[0] * dt, stage, f0);
        for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + z_[n + i];
        system_.rhs(t + kC[1] * dt, stage, f1);
        double norm = 0.0;
        double scale = 1.0;  // residuals are absolute until the stage terms exceed 1
        for (std::size_t i = 0; i < n; ++i) {
            const double g0 = dt * (kA[0][0] * f0[i] + kA[0][1] * f1[i]);
            const double g1 = dt * (kA[1][0] * f0[i] + kA[1][1] * f1[i]);
            const double r0 = z_[i] - g0;
            const double r1 = z_[n + i] - g1;
            residual[static_cast<Eigen::Index>(i)] = -r0;
            residual[static_cast<Eigen::Index>(n + i)] = -r1;
            norm = std::max({norm, std::abs(r0), std::abs(r1)});
            scale = std::max({scale, std::abs(z_[i]), std::abs(z_[n + i]), std::abs(g0), std::abs(g1)});
        }
        report.iterations = iter;
        report.residual = norm;
        if (!std::isfinite(norm)) return false;
        if (norm <= settings_.tolerance * scale) return true;
        const Eigen::VectorXd delta = lu_.solve(residual);
        double step = 0.0, size = 1.0;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            z_[i] += delta[static_cast<Eigen::Index>(i)];
            step = std::max(step, std::abs(delta[static_cast<Eigen::Index>(i)]));
            size = std::max(size, std::abs(z_[i]));
        }
        // A stiff Jacobian puts a rounding floor under the residual; a
        // correction at rounding level means the stages are as good as they get.
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * size) return true;
    }
    return false;
}

StepReport GaussLegendre2::step(double t, std::span<double> y, double dt) {
    if (!(dt > 0.0)) fail(ErrorKind::domain, "step size must be positive");
    if (y.size() != system_.dimension()) fail(ErrorKind::structural, "state length does not match the system");
    StepReport report;
    if (factored_dt_ != dt) {
        factor(t, y, dt);
        report.refactored = true;
    }
    bool ok = solve_stages(t, y, dt, report);
    if (!ok && !report.refactored) {
        factor(t, y, dt);
        report.refactored = true;
        ok = solve_stages(t, y, dt, report);
    }
    if (!ok) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "stage equations failed to converge at t = %.6g (residual %.3g after %d iterations)",
                      t, report.residual, report.iterations);
        fail(ErrorKind::numerical, msg);
    }
    const std::size_t n = system_.dimension();
    for (std::size_t i = 0; i < n; ++i) y[i] += kWeights.d[0] * z_[i] + kWeights.d[1] * z_[n + i];
    return report;
}

std::vector<double> irk_step(const ProblemSpec& p, const Grid1D& grid, std::span<const double> state, double dt,
                             double t) {
    const MethodOfLines system(p, grid);
    if (state.size() != system.dimension())
        fail(ErrorKind::structural, "state length " + std::to_string(state.size()) + " does not match " +
                                        std::to_string(system.dimension()));
    GaussLegendre2 integrator(system);
    std::vector<double> y(state.begin(), state.end());
    integrator.step(t, y, dt);
    return y;
}

GridSolution integrate(const ProblemSpec& p, const Grid1D& grid, double t_end, double dt,
                       std::span<const double> record_times) {
    if (!(dt > 0.0)) fail(ErrorKind::domain, "step size must be positive");
    if (!(t_end >= 0.0)) fail(ErrorKind::domain, "end time must be nonnegative");
    const MethodOfLines system(p, grid);
    std::vector<double> wanted(record_times.begin(), record_times.end());
    if (wanted.empty() && t_end > 0.0) wanted.push_back(t_end);
    std::sort(wanted.begin(), wanted.end());

    std::vector<long> stops;
    for (double t : wanted) {
        if (t < 0.0 || t > t_end * (1.0 + 1e-12) + 1e-15)
            fail(ErrorKind::domain, "record time " + std::to_string(t) + " outside [0, t_end]");
        const double steps = t / dt;
        const double r = std::nearbyint(steps);
        if (std::abs(steps - r) > 1e-6)
            fail(ErrorKind::domain, "record time " + std::to_string(t) + " is not a multiple of dt");
        stops.push_back(static_cast<long>(r));
    }

    std::vector<double> y = system.initial_state();
    const std::size_t n = grid.node_count();
    GridSolution out{grid, {0.0}, {std::vector<double>(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n))}};
    GaussLegendre2 integrator(system);
    long done = 0;
    for (std::size_t r = 0; r < stops.size(); ++r) {
        if (stops[r] == 0) continue;
        while (done < stops[r]) {
            integrator.step(static_cast<double>(done) * dt, y, dt);
            ++done;
        }
        out.times.push_back(wanted[r]);
        out.values.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return out;
}

Grid1D reference_grid(BuiltinId id, double x_min, double x_max, int cells) {
    if (x_max < x_min) std::swap(x_min, x_max);
    if (id == BuiltinId::ex43) {
        // Dyadic half-width keeps x = 0, 1, 2, ... on the nodes for power-of-two cell counts.
        const double reach = std::max(std::abs(x_min), std::abs(x_max)) + 4.0;
        double half = 8.0;
        while (half < reach) half *= 2.0;
        return Grid1D(-half, half, cells, Boundary::dirichlet_frozen);
    }
    const double centre = 0.5 * (x_min + x_max);
    const double periods = std::max(1.0, std::ceil((x_max - x_min) / (2.0 * std::numbers::pi)));
    const double half = periods * std::numbers::pi;
    return Grid1D(centre - half, centre + half, cells, Boundary::periodic);
}

}  // namespace kgfrac
