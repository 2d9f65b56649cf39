#include "sae/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sae/errors.hpp"

namespace sae {

namespace {

constexpr double kGridFloor = 1e-6;
constexpr double kInvGolden = 0.6180339887498949;  // 1/phi
constexpr int kMaxGoldenIters = 512;
constexpr double kPivotRatioFloor = 1e-12;

std::string format_arg(double t) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", t);
    return buf;
}

}  // namespace

namespace detail {

std::optional<ScalarMinResult> minimize_scalar_partial(
    const std::function<std::optional<double>(double)>& f,
    double lo, double hi, int grid_points, double tol, ObjectiveTrace* trace) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_scalar: need lo < hi");
    if (grid_points < 3) throw std::invalid_argument("minimize_scalar: need grid_points >= 3");
    if (!(tol > 0.0)) throw std::invalid_argument("minimize_scalar: need tol > 0");

    int evaluations = 0;
    auto eval = [&](double t) -> std::optional<double> {
        ++evaluations;
        const auto v = f(t);
        if (v && trace) trace->points.emplace_back(t, *v);
        return v;
    };

    // Log-spaced grid over [max(lo, floor), hi], plus the raw left endpoint
    // when it sits below the floor (typically lo = 0).
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(grid_points) + 1);
    const double grid_lo = std::max(lo, kGridFloor);
    if (lo < grid_lo) ts.push_back(lo);
    if (grid_lo < hi) {
        const double llo = std::log(grid_lo);
        const double lhi = std::log(hi);
        for (int j = 0; j < grid_points; ++j) {
            double t = std::exp(llo + (lhi - llo) * j / (grid_points - 1));
            if (j == 0) t = grid_lo;
            if (j == grid_points - 1) t = hi;
            ts.push_back(t);
        }
    } else {
        // Degenerate range entirely below the floor: fall back to linear.
        for (int j = 0; j < grid_points; ++j)
            ts.push_back(lo + (hi - lo) * j / (grid_points - 1));
    }

    std::vector<std::optional<double>> vals(ts.size());
    int best = -1;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        vals[i] = eval(ts[i]);
        if (vals[i] && (best < 0 || *vals[i] < *vals[best])) best = static_cast<int>(i);
    }
    if (best < 0) return std::nullopt;

    double best_t = ts[best];
    double best_v = *vals[best];

    // Bracket between the nearest evaluable neighbors of the grid best.
    int left = best;
    int right = best;
    for (int i = best - 1; i >= 0; --i)
        if (vals[i]) { left = i; break; }
    for (int i = best + 1; i < static_cast<int>(ts.size()); ++i)
        if (vals[i]) { right = i; break; }

    auto consider = [&](double t, double v) {
        if (v < best_v || (v == best_v && t < best_t)) {
            best_t = t;
            best_v = v;
        }
    };

    bool converged = true;
    if (right > left) {
        double a = ts[left];
        double b = ts[right];
        auto safe = [&](double t) -> double {
            const auto v = eval(t);
            return v ? *v : std::numeric_limits<double>::infinity();
        };
        double x1 = b - kInvGolden * (b - a);
        double x2 = a + kInvGolden * (b - a);
        double f1 = safe(x1);
        double f2 = safe(x2);
        int iters = 0;
        while (b - a > tol && iters < kMaxGoldenIters) {
            if (f1 <= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kInvGolden * (b - a);
                f1 = safe(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kInvGolden * (b - a);
                f2 = safe(x2);
            }
            ++iters;
        }
        converged = (b - a) <= tol;
        if (std::isfinite(f1)) consider(x1, f1);
        if (std::isfinite(f2)) consider(x2, f2);
    }

    ScalarMinResult result;
    result.argmin = best_t;
    result.value = best_v;
    result.evaluations = evaluations;
    result.converged = converged;
    return result;
}

std::vector<double> solve_spd(std::vector<double> M, std::vector<double> b,
                              int p, double* log_det) {
    if (p < 1 || M.size() != static_cast<std::size_t>(p) * p ||
        b.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("solve_spd: inconsistent dimensions");

    // In-place lower Cholesky; pivots monitored for rank deficiency.
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
    double ld = 0.0;
    for (int k = 0; k < p; ++k) {
        double pivot = M[k * p + k];
        for (int j = 0; j < k; ++j) pivot -= M[k * p + j] * M[k * p + j];
        if (!(pivot > 0.0))
            throw SingularDesignError("solve_spd: non-positive pivot at column " +
                                      std::to_string(k));
        max_pivot = std::max(max_pivot, pivot);
        min_pivot = std::min(min_pivot, pivot);
        ld += std::log(pivot);
        const double L = std::sqrt(pivot);
        M[k * p + k] = L;
        for (int i = k + 1; i < p; ++i) {
            double v = M[i * p + k];
            for (int j = 0; j < k; ++j) v -= M[i * p + j] * M[k * p + j];
            M[i * p + k] = v / L;
        }
    }
    if (min_pivot < kPivotRatioFloor * max_pivot)
        throw SingularDesignError("solve_spd: pivot ratio below 1e-12");

    // Forward then back substitution.
    for (int i = 0; i < p; ++i) {
        double v = b[i];
        for (int j = 0; j < i; ++j) v -= M[i * p + j] * b[j];
        b[i] = v / M[i * p + i];
    }
    for (int i = p - 1; i >= 0; --i) {
        double v = b[i];
        for (int j = i + 1; j < p; ++j) v -= M[j * p + i] * b[j];
        b[i] = v / M[i * p + i];
    }
    if (log_det) *log_det = ld;
    return b;
}

}  // namespace detail

ScalarMinResult minimize_scalar(const std::function<double(double)>& f,
                                double lo, double hi, int grid_points,
                                double tol, ObjectiveTrace* trace) {
    auto checked = [&](double t) -> std::optional<double> {
        const double v = f(t);
        if (!std::isfinite(v))
            throw NonFiniteObjectiveError(
                "minimize_scalar: objective non-finite at t=" + format_arg(t), t);
        return v;
    };
    auto result = detail::minimize_scalar_partial(checked, lo, hi, grid_points, tol, trace);
    return *result;  // checked never declines a point
}

std::vector<double> solve_wls(const std::vector<double>& rows, int p,
                              const std::vector<double>& targets,
                              const std::vector<double>& weights) {
    if (p < 1) throw std::invalid_argument("solve_wls: need p >= 1");
    const std::size_t m = targets.size();
    if (rows.size() != m * static_cast<std::size_t>(p) || weights.size() != m)
        throw std::invalid_argument("solve_wls: row/target/weight sizes disagree");
    if (m < static_cast<std::size_t>(p))
        throw SingularDesignError("solve_wls: fewer rows than parameters");

    int positive = 0;
    for (const double w : weights) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("solve_wls: weights must be nonnegative");
        if (w > 0.0) ++positive;
    }
    if (positive < p)
        throw SingularDesignError("solve_wls: fewer positively weighted rows than parameters");

    std::vector<double> M(static_cast<std::size_t>(p) * p, 0.0);
    std::vector<double> rhs(p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double w = weights[i];
        if (w == 0.0) continue;
        const double* a = &rows[i * p];
        for (int r = 0; r < p; ++r) {
            const double wa = w * a[r];
            rhs[r] += wa * targets[i];
            for (int c = r; c < p; ++c) M[r * p + c] += wa * a[c];
        }
    }
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < r; ++c) M[r * p + c] = M[c * p + r];

    return detail::solve_spd(std::move(M), std::move(rhs), p);
}

}  // namespace sae
