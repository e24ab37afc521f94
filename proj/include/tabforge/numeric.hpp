#pragma once

#include "tabforge/common.hpp"

#include <vector>

namespace tabforge {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom: P(X >= x).
double chi2_sf(double x, double dof);

struct Standardization {
    Vector mean;
    Vector stddev; // 1.0 for constant columns so the transform stays finite
};

/// Column-wise (x - mean) / std. Constant columns map to all zeros.
Standardization standardize_in_place(Matrix& features);

/// Linear-interpolation quantile of a sorted vector, q in [0, 1].
double sorted_quantile(const std::vector<double>& sorted_values, double q);

} // namespace tabforge
