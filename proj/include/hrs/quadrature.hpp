#pragma once

#include <functional>

namespace hrs {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    int max_depth = 60;
};

/// Adaptive Simpson integration of f over [a, b] to a relative tolerance.
/// Throws std::runtime_error when the error bound cannot be met within
/// the depth limit.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         QuadratureOptions opt = {});

/// Adaptive Gauss-Kronrod (G7/K15) integration; an independent scheme
/// used to cross-check integrate_simpson and to drive the numerical
/// validation oracles.
double integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                               QuadratureOptions opt = {});

}  // namespace hrs
