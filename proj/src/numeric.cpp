#include "tabforge/numeric.hpp"

#include <cmath>
#include <limits>

namespace tabforge {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;

// Series expansion, converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction, converges fast for x > a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) fail("InvalidArgument", "gamma_p: a > 0 and x >= 0 required");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) fail("InvalidArgument", "gamma_q: a > 0 and x >= 0 required");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return gamma_q(0.5 * dof, 0.5 * x);
}

Standardization standardize_in_place(Matrix& features) {
    const Index m = features.cols();
    const Index n = features.rows();
    Standardization s;
    s.mean = Vector::Zero(m);
    s.stddev = Vector::Ones(m);
    if (n == 0) return s;
    for (Index j = 0; j < m; ++j) {
        const double mu = features.col(j).mean();
        const double var = (features.col(j).array() - mu).square().sum() / static_cast<double>(n);
        const double sd = std::sqrt(var);
        s.mean[j] = mu;
        s.stddev[j] = sd > 0.0 ? sd : 1.0;
        features.col(j) = (features.col(j).array() - mu) / s.stddev[j];
    }
    return s;
}

double sorted_quantile(const std::vector<double>& sorted_values, double q) {
    if (sorted_values.empty()) fail("InvalidArgument", "quantile of empty vector");
    if (q <= 0.0) return sorted_values.front();
    if (q >= 1.0) return sorted_values.back();
    const double pos = q * static_cast<double>(sorted_values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted_values.size()) return sorted_values.back();
    return sorted_values[lo] * (1.0 - frac) + sorted_values[lo + 1] * frac;
}

} // namespace tabforge
