#pragma once

#include <span>
#include <vector>

namespace kgfrac {

/// Truncated Taylor expansion sum_j c_j (x - x0)^j, j = 0..order, of a
/// function of the space variable about a fixed base point.
///
/// Binary operations require the same base point and order; nothing is
/// silently truncated or padded. Use truncated() to bring operands to a
/// common order first.
class Jet {
public:
    Jet(double base_point, std::vector<double> coeffs);

    static Jet constant(double c, double x0, int order);
    static Jet zero(double x0, int order) { return constant(0.0, x0, order); }

    double base_point() const noexcept { return base_; }
    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    double value() const noexcept { return c_.front(); }
    std::span<const double> coeffs() const noexcept { return c_; }
    double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }

    Jet truncated(int order) const;

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);
    Jet& operator*=(double s);

    /// First derivative; order drops by one.
    Jet d1() const;
    /// Second derivative; order drops by two.
    Jet d2() const;
    /// 1 / this, by forward substitution. Requires a nonzero constant term.
    Jet reciprocal() const;

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) { return a *= -1.0; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator*(const Jet& a, const Jet& b);

private:
    double base_;
    std::vector<double> c_;
};

void require_compatible(const Jet& a, const Jet& b);

enum class Elementary { sin, cos, exp, sech, cosh, identity };

Jet jet_const(double c, double x0, int order);
Jet jet_elem(Elementary kind, double x0, int order);
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, double s);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_d2(const Jet& a);

/// Jet of sin(eta x + phase + quarter_turns * pi/2) (or cos), with the
/// quarter turns applied exactly.
Jet jet_trig(bool cosine, double eta, double phase, int quarter_turns, double x0, int order);

/// Jet of exp(rate x).
Jet jet_exp(double rate, double x0, int order);

/// Jet of x^p.
Jet jet_power_of_x(int p, double x0, int order);

/// a^p by repeated multiplication, p >= 0.
Jet jet_pow(const Jet& a, int p);

}  // namespace kgfrac
