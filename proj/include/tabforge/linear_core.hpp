#pragma once

#include "tabforge/common.hpp"

namespace tabforge::linear {

/// Mean logistic loss plus penalties:
///   J(w, b) = (1/n) sum_i [log(1 + exp(z_i)) - y_i z_i] + (l2/2)||w||^2 + l1*||w||_1
/// with z = Xw + b, y in {0,1}. The intercept is never penalized.
double logistic_objective(const Matrix& X, const IntVector& y, const Vector& w, double b,
                          double l2, double l1);

/// Gradient of the smooth part (data term + L2) with respect to (w, b).
void logistic_smooth_gradient(const Matrix& X, const IntVector& y, const Vector& w, double b,
                              double l2, Vector& grad_w, double& grad_b);

struct LogisticFit {
    Vector weights;
    double intercept = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Newton iterations with step halving, stopped when the gradient infinity
/// norm falls below tol.
LogisticFit fit_logistic_l2(const Matrix& X, const IntVector& y, double l2, double tol = 1e-6,
                            int max_iter = 100);

/// IRLS with an inner soft-threshold coordinate sweep; stopped on the L1
/// subgradient optimality conditions at tolerance tol.
LogisticFit fit_logistic_l1(const Matrix& X, const IntVector& y, double l1, double tol = 1e-6,
                            int max_iter = 200);

struct LassoFit {
    Vector weights;
    double intercept = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Coordinate descent on (1/2n)||y - Xw - b||^2 + alpha*||w||_1 with an
/// unpenalized intercept, stopped when the largest coefficient change in a
/// sweep falls below tol.
LassoFit fit_lasso(const Matrix& X, const Vector& y, double alpha, double tol = 1e-8,
                   int max_iter = 100000);

struct OlsFit {
    Vector weights;
    double intercept = 0.0;
};

/// Normal equations with a ridge jitter on the diagonal for rank-deficient
/// designs.
OlsFit fit_ols(const Matrix& X, const Vector& y, bool fit_intercept, double jitter = 1e-10);

} // namespace tabforge::linear
