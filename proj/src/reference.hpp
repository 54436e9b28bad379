#pragma once

#include "problem.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <optional>
#include <span>
#include <vector>

namespace kgfrac {

enum class Boundary { periodic, dirichlet_frozen };

/// Uniform 1-D grid. Periodic grids carry the nodes lo + i h, i < cells
/// (hi is identified with lo); frozen-Dirichlet grids carry all cells + 1
/// nodes and hold the two end values fixed in time.
class Grid1D {
public:
    Grid1D(double lo, double hi, int cells, Boundary boundary);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    int cells() const noexcept { return cells_; }
    double h() const noexcept { return h_; }
    Boundary boundary() const noexcept { return boundary_; }

    std::size_t node_count() const noexcept;
    double node(std::size_t i) const noexcept { return lo_ + static_cast<double>(i) * h_; }
    std::vector<double> nodes() const;

    /// Index of the node at x, if x sits on one (to within 1e-9 h).
    std::optional<std::size_t> node_index(double x) const;
    /// Nodal value at x, or 4-point Lagrange interpolation between nodes.
    double sample(std::span<const double> u, double x) const;

private:
    double lo_;
    double hi_;
    int cells_;
    double h_;
    Boundary boundary_;
};

/// Second-order central difference (u[i-1] - 2u[i] + u[i+1]) / h^2. Frozen
/// boundary nodes get 0.
std::vector<double> laplacian(const Grid1D& grid, std::span<const double> u);

/// y' = F(t, y) with a sparse Jacobian.
class OdeSystem {
public:
    virtual ~OdeSystem() = default;
    virtual std::size_t dimension() const = 0;
    virtual void rhs(double t, std::span<const double> y, std::span<double> dydt) const = 0;
    virtual Eigen::SparseMatrix<double> jacobian(double t, std::span<const double> y) const = 0;
};

/// Semi-discretisation of the canonical problem on a grid. mu = 1 evolves u;
/// mu = 2 evolves the stacked state (u, v = u_t).
class MethodOfLines final : public OdeSystem {
public:
    MethodOfLines(ProblemSpec problem, Grid1D grid);

    std::size_t dimension() const override;
    void rhs(double t, std::span<const double> y, std::span<double> dydt) const override;
    Eigen::SparseMatrix<double> jacobian(double t, std::span<const double> y) const override;

    std::vector<double> initial_state() const;
    bool second_order() const noexcept { return second_order_; }
    const Grid1D& grid() const noexcept { return grid_; }

private:
    ProblemSpec problem_;
    Grid1D grid_;
    bool second_order_;
    std::vector<double> x_;
};

struct NewtonSettings {
    double tolerance = 1e-12;
    int max_iterations = 25;
};

struct StepReport {
    int iterations = 0;
    double residual = 0.0;
    bool refactored = false;
};

/// Two-stage Gauss-Legendre implicit Runge-Kutta (order 4, A-stable).
/// Stage equations are solved by simplified Newton; the iteration matrix is
/// factored once per step size and refreshed only when Newton stalls.
class GaussLegendre2 {
public:
    explicit GaussLegendre2(const OdeSystem& system, NewtonSettings settings = {});

    /// Advances y from t to t + dt in place. Throws a numerical Error if the
    /// stage equations do not converge.
    StepReport step(double t, std::span<double> y, double dt);

private:
    void factor(double t, std::span<const double> y, double dt);
    bool solve_stages(double t, std::span<const double> y, double dt, StepReport& report);

    const OdeSystem& system_;
    NewtonSettings settings_;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
    double factored_dt_ = 0.0;
    std::vector<double> z_;
};

/// One step of the reference integrator on the semi-discrete problem.
std::vector<double> irk_step(const ProblemSpec& p, const Grid1D& grid, std::span<const double> state, double dt,
                             double t = 0.0);

struct GridSolution {
    Grid1D grid;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // u at the grid nodes, one row per time

    double at(std::size_t row, double x) const { return grid.sample(values[row], x); }
};

/// Integrates from t = 0 with fixed step dt. Row 0 is the initial data; one
/// further row is recorded at every requested time (each a multiple of dt),
/// or at t_end when none are given.
GridSolution integrate(const ProblemSpec& p, const Grid1D& grid, double t_end, double dt,
                       std::span<const double> record_times = {});

/// Default grid for a worked example covering [x_min, x_max]: periodic over
/// a multiple of [c - pi, c + pi] for the sin-based data, frozen Dirichlet on
/// [-L, L] with L >= 8 for the sech data.
Grid1D reference_grid(BuiltinId id, double x_min, double x_max, int cells);

}  // namespace kgfrac
