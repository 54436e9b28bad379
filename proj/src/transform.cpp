#include "transform.hpp"

#include "error.hpp"

#include <algorithm>
#include <string>

namespace kgfrac {

CoeffSeq::CoeffSeq(FracOrder order, double t0, std::vector<Jet> terms)
    : order_(order), t0_(t0), terms_(std::move(terms)) {
    if (terms_.empty()) fail(ErrorKind::structural, "coefficient sequence must be nonempty");
    for (const Jet& term : terms_)
        if (term.base_point() != terms_.front().base_point())
            fail(ErrorKind::structural, "coefficient sequence mixes base points");
}

namespace {

void require_compatible(const CoeffSeq& a, const CoeffSeq& b) {
    if (a.size() != b.size())
        fail(ErrorKind::structural,
             "sequence length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    if (!(a.order() == b.order())) fail(ErrorKind::structural, "sequences use different fractional orders");
    if (a.t0() != b.t0()) fail(ErrorKind::structural, "sequences use different expansion times");
    if (a.base_point() != b.base_point()) fail(ErrorKind::structural, "sequences use different base points");
}

void require_index(std::size_t size, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= size)
        fail(ErrorKind::structural,
             "coefficient index " + std::to_string(k) + " out of range for length " + std::to_string(size));
}

int min_order(std::span<const Jet> terms, int upto) {
    int m = terms[0].order();
    for (int i = 1; i <= upto; ++i) m = std::min(m, terms[static_cast<std::size_t>(i)].order());
    return m;
}

}  // namespace

CoeffSeq delta_sequence(const FracOrder& order, double x0, std::size_t length, int order0) {
    std::vector<Jet> terms(length, Jet::zero(x0, order0));
    terms[0] = Jet::constant(1.0, x0, order0);
    return CoeffSeq(order, 0.0, std::move(terms));
}

CoeffSeq zero_sequence_like(const CoeffSeq& like) {
    std::vector<Jet> terms;
    terms.reserve(like.size());
    for (const Jet& t : like.terms()) terms.push_back(Jet::zero(t.base_point(), t.order()));
    return CoeffSeq(like.order(), like.t0(), std::move(terms));
}

CoeffSeq seq_add(const CoeffSeq& a, const CoeffSeq& b) {
    require_compatible(a, b);
    std::vector<Jet> terms;
    terms.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) terms.push_back(a[k] + b[k]);
    return CoeffSeq(a.order(), a.t0(), std::move(terms));
}

CoeffSeq seq_scale(const CoeffSeq& a, double s) {
    std::vector<Jet> terms;
    terms.reserve(a.size());
    for (const Jet& t : a.terms()) terms.push_back(t * s);
    return CoeffSeq(a.order(), a.t0(), std::move(terms));
}

Jet seq_conv(std::span<const Jet> a, std::span<const Jet> b, int k) {
    require_index(a.size(), k);
    require_index(b.size(), k);
    const int order = std::min(min_order(a, k), min_order(b, k));
    Jet acc = Jet::zero(a[0].base_point(), order);
    for (int r = 0; r <= k; ++r)
        acc += a[static_cast<std::size_t>(r)].truncated(order) * b[static_cast<std::size_t>(k - r)].truncated(order);
    return acc;
}

Jet seq_conv(const CoeffSeq& a, const CoeffSeq& b, int k) {
    if (a.base_point() != b.base_point()) fail(ErrorKind::structural, "sequences use different base points");
    return seq_conv(a.terms(), b.terms(), k);
}

Jet seq_conv3(std::span<const Jet> a, int k) {
    require_index(a.size(), k);
    const int order = min_order(a, k);
    Jet acc = Jet::zero(a[0].base_point(), order);
    for (int r = 0; r <= k; ++r)
        acc += seq_conv(a, a, r).truncated(order) * a[static_cast<std::size_t>(k - r)].truncated(order);
    return acc;
}

Jet seq_conv3(const CoeffSeq& a, int k) { return seq_conv3(a.terms(), k); }

CoeffSeq seq_shift_fractional(const CoeffSeq& a, int r) {
    if (r < 1) fail(ErrorKind::structural, "derivative shift must be at least 1");
    if (static_cast<std::size_t>(r) >= a.size())
        fail(ErrorKind::structural, "shift " + std::to_string(r) + " leaves no terms of a length-" +
                                        std::to_string(a.size()) + " sequence");
    const double beta = a.order().beta();
    std::vector<Jet> terms;
    terms.reserve(a.size() - static_cast<std::size_t>(r));
    for (std::size_t k = 0; k + static_cast<std::size_t>(r) < a.size(); ++k) {
        const double kk = static_cast<double>(k);
        const double factor = gamma_ratio(beta * kk + beta * r + 1.0, beta * kk + 1.0);
        terms.push_back(a[k + static_cast<std::size_t>(r)] * factor);
    }
    return CoeffSeq(a.order(), a.t0(), std::move(terms));
}

CoeffSeq seq_tx_product(const CoeffSeq& v, int m, int n) {
    if (n < 0) fail(ErrorKind::domain, "t-power index must be nonnegative");
    std::vector<Jet> terms;
    terms.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Jet& vk = v[k];
        if (k < static_cast<std::size_t>(n)) {
            terms.push_back(Jet::zero(vk.base_point(), vk.order()));
            continue;
        }
        const Jet& src = v[k - static_cast<std::size_t>(n)];
        const int order = std::min(vk.order(), src.order());
        Jet shifted = jet_power_of_x(m, vk.base_point(), order) * src.truncated(order);
        // Keep each slot at the order of the original sequence.
        if (order < vk.order()) {
            std::vector<double> padded(shifted.coeffs().begin(), shifted.coeffs().end());
            padded.resize(static_cast<std::size_t>(vk.order()) + 1, 0.0);
            shifted = Jet(vk.base_point(), std::move(padded));
        }
        terms.push_back(std::move(shifted));
    }
    return CoeffSeq(v.order(), v.t0(), std::move(terms));
}

CoeffSeq seq_monomial(const FracOrder& order, double c, int m, int n, double x0, std::size_t length, int order0) {
    const CoeffSeq delta = delta_sequence(order, x0, length, order0);
    return seq_scale(seq_tx_product(delta, m, n), c);
}

namespace {

void require_seed_order(int n, int order0) {
    if (n < 0) fail(ErrorKind::domain, "truncation index must be nonnegative");
    if (order0 < 2 * n)
        fail(ErrorKind::insufficient_order, "seed jet order " + std::to_string(order0) + " cannot hold " +
                                                std::to_string(n + 1) + " terms; need at least " +
                                                std::to_string(2 * n));
}

}  // namespace

CoeffSeq seq_exp(double lambda, double mu_x, double x0, int n, int order0) {
    require_seed_order(n, order0);
    std::vector<Jet> terms;
    double scale = 1.0;  // lambda^k / k!
    for (int k = 0; k <= n; ++k) {
        if (k > 0) scale *= lambda / k;
        terms.push_back(jet_exp(mu_x, x0, order0 - 2 * k) * scale);
    }
    return CoeffSeq(FracOrder::from_mu(1.0), 0.0, std::move(terms));
}

CoeffSeq seq_trig(TrigKind kind, double eta, double omega, double x0, int n, int order0) {
    require_seed_order(n, order0);
    std::vector<Jet> terms;
    double scale = 1.0;  // omega^k / k!
    for (int k = 0; k <= n; ++k) {
        if (k > 0) scale *= omega / k;
        terms.push_back(jet_trig(kind == TrigKind::cos, eta, 0.0, k, x0, order0 - 2 * k) * scale);
    }
    return CoeffSeq(FracOrder::from_mu(1.0), 0.0, std::move(terms));
}

}  // namespace kgfrac
