#include "jet.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kgfrac {

Jet::Jet(double base_point, std::vector<double> coeffs) : base_(base_point), c_(std::move(coeffs)) {
    if (c_.empty()) fail(ErrorKind::structural, "jet needs at least one coefficient");
}

Jet Jet::constant(double c, double x0, int order) {
    if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
    std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 0.0);
    coeffs[0] = c;
    return Jet(x0, std::move(coeffs));
}

Jet Jet::truncated(int order) const {
    if (order < 0 || order > this->order())
        fail(ErrorKind::structural, "cannot truncate order-" + std::to_string(this->order()) + " jet to order " +
                                        std::to_string(order));
    return Jet(base_, std::vector<double>(c_.begin(), c_.begin() + order + 1));
}

void require_compatible(const Jet& a, const Jet& b) {
    if (a.base_point() != b.base_point())
        fail(ErrorKind::structural, "jets expanded about different base points");
    if (a.order() != b.order())
        fail(ErrorKind::structural,
             "jet order mismatch: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

Jet& Jet::operator+=(const Jet& other) {
    require_compatible(*this, other);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += other.c_[j];
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    require_compatible(*this, other);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= other.c_[j];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& c : c_) c *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    const std::size_t n = a.c_.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i <= j; ++i) acc += a.c_[i] * b.c_[j - i];
        out[j] = acc;
    }
    return Jet(a.base_, std::move(out));
}

Jet Jet::d1() const {
    if (order() < 1) fail(ErrorKind::insufficient_order, "first derivative needs a jet of order >= 1");
    std::vector<double> out(c_.size() - 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<double>(j + 1) * c_[j + 1];
    return Jet(base_, std::move(out));
}

Jet Jet::d2() const {
    if (order() < 2)
        fail(ErrorKind::insufficient_order,
             "second derivative needs a jet of order >= 2, got order " + std::to_string(order()));
    std::vector<double> out(c_.size() - 2);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = static_cast<double>((j + 2) * (j + 1)) * c_[j + 2];
    return Jet(base_, std::move(out));
}

Jet Jet::reciprocal() const {
    if (c_[0] == 0.0) fail(ErrorKind::domain, "reciprocal of a jet with zero constant term");
    std::vector<double> r(c_.size(), 0.0);
    r[0] = 1.0 / c_[0];
    for (std::size_t j = 1; j < c_.size(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= j; ++i) acc += c_[i] * r[j - i];
        r[j] = -acc * r[0];
    }
    return Jet(base_, std::move(r));
}

Jet jet_const(double c, double x0, int order) { return Jet::constant(c, x0, order); }

Jet jet_trig(bool cosine, double eta, double phase, int quarter_turns, double x0, int order) {
    if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
    const double theta = eta * x0 + phase;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    // k-th derivative of sin(theta) is sin(theta + k pi/2); cos(theta) = sin(theta + pi/2).
    const int start = quarter_turns + (cosine ? 1 : 0);
    std::vector<double> out(static_cast<std::size_t>(order) + 1);
    double scale = 1.0;  // eta^j / j!
    for (int j = 0; j <= order; ++j) {
        if (j > 0) scale *= eta / j;
        double v = 0.0;
        switch (((start + j) % 4 + 4) % 4) {
            case 0: v = s; break;
            case 1: v = c; break;
            case 2: v = -s; break;
            default: v = -c; break;
        }
        out[static_cast<std::size_t>(j)] = scale * v;
    }
    return Jet(x0, std::move(out));
}

Jet jet_exp(double rate, double x0, int order) {
    if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
    std::vector<double> out(static_cast<std::size_t>(order) + 1);
    double term = std::exp(rate * x0);
    for (int j = 0; j <= order; ++j) {
        if (j > 0) term *= rate / j;
        out[static_cast<std::size_t>(j)] = term;
    }
    return Jet(x0, std::move(out));
}

namespace {

Jet jet_cosh(double x0, int order) {
    std::vector<double> out(static_cast<std::size_t>(order) + 1);
    const double ch = std::cosh(x0);
    const double sh = std::sinh(x0);
    double inv_fact = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) inv_fact /= j;
        out[static_cast<std::size_t>(j)] = (j % 2 == 0 ? ch : sh) * inv_fact;
    }
    return Jet(x0, std::move(out));
}

}  // namespace

Jet jet_power_of_x(int p, double x0, int order) {
    if (p < 0) fail(ErrorKind::domain, "x-power must be nonnegative");
    if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
    // (x0 + h)^p = sum_j C(p, j) x0^(p-j) h^j
    std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= std::min(p, order); ++j) {
        if (j > 0) binom = binom * (p - j + 1) / j;
        out[static_cast<std::size_t>(j)] = binom * std::pow(x0, p - j);
    }
    return Jet(x0, std::move(out));
}

Jet jet_elem(Elementary kind, double x0, int order) {
    switch (kind) {
        case Elementary::sin: return jet_trig(false, 1.0, 0.0, 0, x0, order);
        case Elementary::cos: return jet_trig(true, 1.0, 0.0, 0, x0, order);
        case Elementary::exp: return jet_exp(1.0, x0, order);
        case Elementary::cosh:
            if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
            return jet_cosh(x0, order);
        case Elementary::sech:
            if (order < 0) fail(ErrorKind::structural, "jet order must be nonnegative");
            return jet_cosh(x0, order).reciprocal();
        case Elementary::identity: return jet_power_of_x(1, x0, order);
    }
    fail(ErrorKind::domain, "unknown elementary function");
}

Jet jet_pow(const Jet& a, int p) {
    if (p < 0) fail(ErrorKind::domain, "jet power must be nonnegative");
    Jet out = Jet::constant(1.0, a.base_point(), a.order());
    for (int i = 0; i < p; ++i) out = out * a;
    return out;
}

Jet jet_add(const Jet& a, const Jet& b) { return a + b; }
Jet jet_scale(const Jet& a, double s) { return a * s; }
Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }
Jet jet_d2(const Jet& a) { return a.d2(); }

}  // namespace kgfrac
