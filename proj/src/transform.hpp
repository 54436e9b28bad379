#pragma once

#include "fraccalc.hpp"
#include "jet.hpp"

#include <span>
#include <vector>

namespace kgfrac {

/// Transformed coefficients U_0..U_N of u(x, t) at one evaluation site, so
/// that u(x, t) ~ sum_k U_k(x) (t - t0)^(k beta).
class CoeffSeq {
public:
    CoeffSeq(FracOrder order, double t0, std::vector<Jet> terms);

    const FracOrder& order() const noexcept { return order_; }
    double t0() const noexcept { return t0_; }
    double base_point() const noexcept { return terms_.front().base_point(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Jet& operator[](std::size_t k) const { return terms_[k]; }
    std::span<const Jet> terms() const noexcept { return terms_; }

private:
    FracOrder order_;
    double t0_;
    std::vector<Jet> terms_;
};

/// Sequence with U_0 = the constant-1 jet and every other term zero.
CoeffSeq delta_sequence(const FracOrder& order, double x0, std::size_t length, int order0);
CoeffSeq zero_sequence_like(const CoeffSeq& like);

CoeffSeq seq_add(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq seq_scale(const CoeffSeq& a, double s);

/// k-th coefficient of the Cauchy product, sum_{r<=k} A_r B_{k-r}. All
/// participants are first truncated to the smallest order among them.
Jet seq_conv(std::span<const Jet> a, std::span<const Jet> b, int k);
Jet seq_conv(const CoeffSeq& a, const CoeffSeq& b, int k);

/// k-th coefficient of the Cauchy cube: sum_{r<=k} (A*A)_r A_{k-r}.
Jet seq_conv3(std::span<const Jet> a, int k);
Jet seq_conv3(const CoeffSeq& a, int k);

/// Transform of the fractional time derivative of order r*beta:
/// W_k = Gamma(beta k + beta r + 1) / Gamma(beta k + 1) A_{k+r}.
CoeffSeq seq_shift_fractional(const CoeffSeq& a, int r);

/// Transform of x^m t^(n beta) v(x, t): U_k = x^m V_{k-n}, zero for k < n.
CoeffSeq seq_tx_product(const CoeffSeq& v, int m, int n);

/// Transform of the pure monomial c x^m t^(n beta): U_k = c x^m delta(k - n).
CoeffSeq seq_monomial(const FracOrder& order, double c, int m, int n, double x0, std::size_t length, int order0);

/// Classical transform of exp(lambda t + mu x): U_k = lambda^k / k! e^(mu x).
/// Term k is a jet of order order0 - 2k; order0 must cover all terms.
CoeffSeq seq_exp(double lambda, double mu_x, double x0, int n, int order0);

enum class TrigKind { sin, cos };

/// Classical transform of sin(eta x + omega t) (or cos):
/// U_k = omega^k / k! sin(eta x + pi k / 2).
CoeffSeq seq_trig(TrigKind kind, double eta, double omega, double x0, int n, int order0);

}  // namespace kgfrac
