#pragma once

#include <cmath>
#include <stdexcept>

namespace hodgemhd {

/// Scaled singular-kernel primitive G(z) = e^{-z} ∫_0^z e^x x^{-3/4} dx.
///
/// This is the exactly integrated building block of the Duhamel quadrature:
/// every cell integral of e^{-mu(t-s)} s^{-3/4} reduces to two evaluations.
/// G is bounded (G ~ 4 z^{1/4} at 0, G ~ z^{-3/4} at infinity), so the
/// formula below never produces large intermediate values.
inline double kernel_g(double z) {
    if (z < 0.0) throw std::domain_error("kernel_g: negative argument");
    if (z == 0.0) return 0.0;
    if (z < 40.0) {
        // positive power series: sum_m z^m / (m! (m + 1/4)), no cancellation
        double term = 1.0;
        double sum = term / 0.25;
        for (int m = 1; m < 400; ++m) {
            term *= z / double(m);
            const double add = term / (double(m) + 0.25);
            sum += add;
            if (add < 1e-18 * sum && double(m) > z) break;
        }
        return std::exp(-z) * std::pow(z, 0.25) * sum;
    }
    // asymptotic series: z^{-3/4} sum_j a_j z^{-j}, a_0 = 1, a_{j+1} = (j+3/4) a_j
    double a = 1.0;
    double sum = a;
    double prev = 1.0;
    for (int j = 0; j < 30; ++j) {
        a *= (double(j) + 0.75) / z;
        if (std::abs(a) >= prev) break; // divergent tail reached
        prev = std::abs(a);
        sum += a;
        if (std::abs(a) < 1e-18 * sum) break;
    }
    return std::pow(z, -0.75) * sum;
}

/// Exact cell integral of the semigroup kernel against the singular weight:
/// ∫_a^b e^{-mu (t-s)} s^{-3/4} ds for 0 <= a < b <= t.
inline double cell_weight_singular(double mu, double a, double b, double t) {
    if (!(0.0 <= a && a < b && b <= t))
        throw std::invalid_argument("cell_weight_singular: need 0 <= a < b <= t");
    if (mu < 0.0) throw std::domain_error("cell_weight_singular: negative mu");
    const double plain = 4.0 * (std::pow(b, 0.25) - std::pow(a, 0.25));
    if (mu * t < 1e-8) {
        // first-order expansion avoids cancellation of two nearby G values
        const double first =
            t * plain - 0.8 * (std::pow(b, 1.25) - std::pow(a, 1.25));
        return plain - mu * first;
    }
    const double upper = std::exp(-mu * (t - b)) * kernel_g(mu * b);
    const double lower = a == 0.0 ? 0.0 : std::exp(-mu * (t - a)) * kernel_g(mu * a);
    return std::pow(mu, -0.25) * (upper - lower);
}

/// ∫_a^b e^{-mu (t-s)} ds, the unweighted companion.
inline double cell_weight_plain(double mu, double a, double b, double t) {
    if (!(0.0 <= a && a < b && b <= t))
        throw std::invalid_argument("cell_weight_plain: need 0 <= a < b <= t");
    if (mu < 0.0) throw std::domain_error("cell_weight_plain: negative mu");
    if (mu == 0.0) return b - a;
    return -std::exp(-mu * (t - b)) * std::expm1(-mu * (b - a)) / mu;
}

} // namespace hodgemhd
