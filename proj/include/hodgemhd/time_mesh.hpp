#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hodgemhd {

/// Graded time mesh t_j = T (j/M)^gamma, j = 0..M. For gamma > 1 the nodes
/// cluster at t = 0 where the Duhamel sources carry the s^{-3/4} weight.
struct GradedMesh {
    double T = 1.0;
    int M = 64;
    double gamma = 2.0;
    std::vector<double> nodes;

    GradedMesh() { rebuild(); }
    GradedMesh(double horizon, int steps, double grading)
        : T(horizon), M(steps), gamma(grading) {
        if (!(T > 0.0)) throw std::invalid_argument("GradedMesh: T must be positive");
        if (M < 1) throw std::invalid_argument("GradedMesh: M must be >= 1");
        if (!(gamma >= 1.0)) throw std::invalid_argument("GradedMesh: grading must be >= 1");
        rebuild();
    }

    /// Index of a node equal to t (within a relative tolerance), or -1.
    int find_node(double t, double rel_tol = 1e-10) const {
        for (int j = 0; j <= M; ++j)
            if (std::abs(nodes[j] - t) <= rel_tol * T) return j;
        return -1;
    }

private:
    void rebuild() {
        nodes.resize(M + 1);
        for (int j = 0; j <= M; ++j) nodes[j] = T * std::pow(double(j) / M, gamma);
        nodes[0] = 0.0;
        nodes[M] = T;
    }
};

} // namespace hodgemhd
