#pragma once

#include <cmath>
#include <functional>

namespace testutil {

/// Composite 16-point Gauss-Legendre quadrature on [a,b].
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int panels = 256) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double acc = 0.0;
        for (int i = 0; i < 8; ++i)
            acc += ws[i] * (f(mid + 0.5 * h * xs[i]) + f(mid - 0.5 * h * xs[i]));
        total += 0.5 * h * acc;
    }
    return total;
}

/// High-precision reference for ∫_a^b e^{-mu (t-s)} s^{-3/4} phi(s) ds.
/// The substitution s = sigma^4 removes the endpoint singularity, leaving a
/// smooth integrand 4 e^{-mu(t - sigma^4)} phi(sigma^4).
inline double singular_convolution_reference(double mu, double a, double b, double t,
                                             const std::function<double(double)>& phi,
                                             int panels = 512) {
    const auto f = [&](double sigma) {
        const double s = sigma * sigma * sigma * sigma;
        return 4.0 * std::exp(-mu * (t - s)) * phi(s);
    };
    return gauss_legendre(f, std::pow(a, 0.25), std::pow(b, 0.25), panels);
}

} // namespace testutil
