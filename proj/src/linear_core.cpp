#include "tabforge/linear_core.hpp"

#include <algorithm>
#include <cmath>

namespace tabforge::linear {

namespace {

inline double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow
inline double log1pexp(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

inline double soft_threshold(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

} // namespace

double logistic_objective(const Matrix& X, const IntVector& y, const Vector& w, double b,
                          double l2, double l1) {
    const Index n = X.rows();
    const Vector z = (X * w).array() + b;
    double loss = 0.0;
    for (Index i = 0; i < n; ++i) {
        loss += log1pexp(z[i]) - static_cast<double>(y[i]) * z[i];
    }
    loss /= static_cast<double>(n);
    if (l2 > 0.0) loss += 0.5 * l2 * w.squaredNorm();
    if (l1 > 0.0) loss += l1 * w.template lpNorm<1>();
    return loss;
}

void logistic_smooth_gradient(const Matrix& X, const IntVector& y, const Vector& w, double b,
                              double l2, Vector& grad_w, double& grad_b) {
    const Index n = X.rows();
    Vector residual = (X * w).array() + b;
    for (Index i = 0; i < n; ++i) {
        residual[i] = sigmoid(residual[i]) - static_cast<double>(y[i]);
    }
    grad_w = X.transpose() * residual / static_cast<double>(n);
    if (l2 > 0.0) grad_w += l2 * w;
    grad_b = residual.mean();
}

LogisticFit fit_logistic_l2(const Matrix& X, const IntVector& y, double l2, double tol,
                            int max_iter) {
    const Index n = X.rows();
    const Index m = X.cols();
    LogisticFit fit;
    fit.weights = Vector::Zero(m);

    Vector grad_w(m);
    double grad_b = 0.0;
    double objective = logistic_objective(X, y, fit.weights, fit.intercept, l2, 0.0);

    for (int iter = 0; iter < max_iter; ++iter) {
        fit.iterations = iter;
        logistic_smooth_gradient(X, y, fit.weights, fit.intercept, l2, grad_w, grad_b);
        const double gnorm = std::max(grad_w.template lpNorm<Eigen::Infinity>(), std::fabs(grad_b));
        if (gnorm < tol) {
            fit.converged = true;
            return fit;
        }

        // Hessian of the augmented system [w; b]
        Vector z = (X * fit.weights).array() + fit.intercept;
        Vector s(n);
        for (Index i = 0; i < n; ++i) {
            const double p = sigmoid(z[i]);
            s[i] = std::max(p * (1.0 - p), 1e-10);
        }
        Matrix H(m + 1, m + 1);
        const Matrix Xs = X.array().colwise() * s.array();
        H.topLeftCorner(m, m) = X.transpose() * Xs / static_cast<double>(n);
        H.topLeftCorner(m, m).diagonal().array() += l2;
        const Vector xs = Xs.colwise().sum() / static_cast<double>(n);
        H.block(0, m, m, 1) = xs;
        H.block(m, 0, 1, m) = xs.transpose();
        H(m, m) = s.sum() / static_cast<double>(n);
        H.diagonal().array() += 1e-12;

        Vector g(m + 1);
        g.head(m) = grad_w;
        g[m] = grad_b;
        const Vector step = H.ldlt().solve(g);

        double scale = 1.0;
        for (int half = 0; half < 60; ++half) {
            const Vector w_try = fit.weights - scale * step.head(m);
            const double b_try = fit.intercept - scale * step[m];
            const double obj_try = logistic_objective(X, y, w_try, b_try, l2, 0.0);
            if (obj_try <= objective) {
                fit.weights = w_try;
                fit.intercept = b_try;
                objective = obj_try;
                break;
            }
            scale *= 0.5;
        }
    }

    logistic_smooth_gradient(X, y, fit.weights, fit.intercept, l2, grad_w, grad_b);
    fit.converged =
        std::max(grad_w.template lpNorm<Eigen::Infinity>(), std::fabs(grad_b)) < tol;
    fit.iterations = max_iter;
    return fit;
}

LogisticFit fit_logistic_l1(const Matrix& X, const IntVector& y, double l1, double tol,
                            int max_iter) {
    const Index n = X.rows();
    const Index m = X.cols();
    LogisticFit fit;
    fit.weights = Vector::Zero(m);

    Vector z = Vector::Zero(n);

    auto optimal = [&](Vector& grad_w, double& grad_b) {
        logistic_smooth_gradient(X, y, fit.weights, fit.intercept, 0.0, grad_w, grad_b);
        if (std::fabs(grad_b) >= tol) return false;
        for (Index j = 0; j < m; ++j) {
            if (fit.weights[j] == 0.0) {
                if (std::fabs(grad_w[j]) > l1 + tol) return false;
            } else if (std::fabs(grad_w[j] + l1 * (fit.weights[j] > 0.0 ? 1.0 : -1.0)) >= tol) {
                return false;
            }
        }
        return true;
    };

    Vector grad_w(m);
    double grad_b = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        fit.iterations = iter;
        if (optimal(grad_w, grad_b)) {
            fit.converged = true;
            return fit;
        }

        // IRLS quadratic approximation around the current iterate
        Vector p(n), s(n), work(n);
        for (Index i = 0; i < n; ++i) {
            p[i] = sigmoid(z[i]);
            s[i] = std::max(p[i] * (1.0 - p[i]), 1e-8);
            work[i] = z[i] + (static_cast<double>(y[i]) - p[i]) / s[i];
        }

        // coordinate sweeps on the weighted lasso subproblem
        Vector r = work - z; // residual of the working response
        for (int sweep = 0; sweep < 200; ++sweep) {
            double max_delta = 0.0;
            {
                const double num = (s.array() * r.array()).sum();
                const double den = s.sum();
                const double delta = num / den;
                fit.intercept += delta;
                r.array() -= delta;
                max_delta = std::max(max_delta, std::fabs(delta));
            }
            for (Index j = 0; j < m; ++j) {
                const double wj = fit.weights[j];
                const double den = (s.array() * X.col(j).array().square()).sum() / n;
                if (den <= 0.0) continue;
                const double rho =
                    (s.array() * X.col(j).array() * r.array()).sum() / n + den * wj;
                const double w_new = soft_threshold(rho, l1) / den;
                const double delta = w_new - wj;
                if (delta != 0.0) {
                    fit.weights[j] = w_new;
                    r -= delta * X.col(j);
                    max_delta = std::max(max_delta, std::fabs(delta));
                }
            }
            if (max_delta < 1e-10) break;
        }
        z = (X * fit.weights).array() + fit.intercept;
    }

    fit.converged = optimal(grad_w, grad_b);
    fit.iterations = max_iter;
    return fit;
}

LassoFit fit_lasso(const Matrix& X, const Vector& y, double alpha, double tol, int max_iter) {
    const Index n = X.rows();
    const Index m = X.cols();
    LassoFit fit;
    fit.weights = Vector::Zero(m);
    fit.intercept = y.mean();

    const Vector col_sq = X.array().square().colwise().sum() / static_cast<double>(n);
    Vector r = y.array() - fit.intercept;

    for (int iter = 0; iter < max_iter; ++iter) {
        fit.iterations = iter + 1;
        double max_delta = 0.0;

        const double b_delta = r.mean();
        fit.intercept += b_delta;
        r.array() -= b_delta;
        max_delta = std::max(max_delta, std::fabs(b_delta));

        for (Index j = 0; j < m; ++j) {
            if (col_sq[j] <= 0.0) continue;
            const double wj = fit.weights[j];
            const double rho = X.col(j).dot(r) / static_cast<double>(n) + col_sq[j] * wj;
            const double w_new = soft_threshold(rho, alpha) / col_sq[j];
            const double delta = w_new - wj;
            if (delta != 0.0) {
                fit.weights[j] = w_new;
                r -= delta * X.col(j);
                max_delta = std::max(max_delta, std::fabs(delta));
            }
        }
        if (max_delta < tol) {
            fit.converged = true;
            return fit;
        }
    }
    return fit;
}

OlsFit fit_ols(const Matrix& X, const Vector& y, bool fit_intercept, double jitter) {
    const Index n = X.rows();
    const Index m = X.cols();
    OlsFit fit;
    if (fit_intercept) {
        Matrix Xa(n, m + 1);
        Xa.leftCols(m) = X;
        Xa.col(m).setOnes();
        Matrix gram = Xa.transpose() * Xa;
        gram.diagonal().array() += jitter;
        const Vector beta = gram.ldlt().solve(Xa.transpose() * y);
        fit.weights = beta.head(m);
        fit.intercept = beta[m];
    } else {
        Matrix gram = X.transpose() * X;
        gram.diagonal().array() += jitter;
        fit.weights = gram.ldlt().solve(X.transpose() * y);
        fit.intercept = 0.0;
    }
    return fit;
}

} // namespace tabforge::linear
