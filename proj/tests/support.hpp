#pragma once

#include "jet.hpp"
#include "transform.hpp"

#include <random>
#include <vector>

namespace testing {

/// Seeded generators for the property suites. Every case draws from its own
/// fixed seed so failures reproduce.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    kgfrac::Jet jet(double x0, int order, double mag = 2.0) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1);
        for (double& v : c) v = uniform(-mag, mag);
        return kgfrac::Jet(x0, std::move(c));
    }

    std::vector<kgfrac::Jet> jets(std::size_t n, double x0, int order, double mag = 2.0) {
        std::vector<kgfrac::Jet> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(jet(x0, order, mag));
        return out;
    }

    kgfrac::CoeffSeq seq(const kgfrac::FracOrder& order, std::size_t n, double x0, int jet_order) {
        return kgfrac::CoeffSeq(order, 0.0, jets(n, x0, jet_order));
    }

private:
    std::mt19937_64 rng_;
};

inline double max_abs_diff(const kgfrac::Jet& a, const kgfrac::Jet& b) {
    double m = 0.0;
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) m = std::max(m, std::abs(ca[i] - cb[i]));
    if (ca.size() != cb.size()) return 1e300;
    return m;
}

}  // namespace testing
