#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sae {

struct ScalarMinResult {
    double argmin = 0.0;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// (parameter, criterion) pairs recorded while profiling a variance parameter.
struct ObjectiveTrace {
    std::vector<std::pair<double, double>> points;
};

inline constexpr int kDefaultGridPoints = 201;
inline constexpr double kDefaultSearchLo = 0.0;
inline constexpr double kDefaultSearchHi = 1e3;
inline constexpr double kDefaultSearchTol = 1e-8;

/// Bounded 1-D minimization: f is evaluated on a log-spaced grid over
/// [max(lo, 1e-6), hi] plus the point lo itself, and the best bracket is
/// refined by golden section until its width drops below tol. Returns the
/// better of grid best and refined point; ties break toward the smaller
/// argument. Throws NonFiniteObjectiveError when f returns NaN/Inf.
ScalarMinResult minimize_scalar(const std::function<double(double)>& f,
                                double lo, double hi,
                                int grid_points = kDefaultGridPoints,
                                double tol = kDefaultSearchTol,
                                ObjectiveTrace* trace = nullptr);

/// argmin_beta sum_i w_i (c_i - a_i' beta)^2 via the weighted normal
/// equations. `rows` is m x p row-major. Throws SingularDesignError when the
/// weighted design is rank deficient (Cholesky pivot ratio below 1e-12 or a
/// non-positive pivot).
std::vector<double> solve_wls(const std::vector<double>& rows, int p,
                              const std::vector<double>& targets,
                              const std::vector<double>& weights);

namespace detail {

/// minimize_scalar, except f may decline a point (nullopt) — used where
/// isolated parameter values make a profiled design singular. nullopt result
/// means every grid point was declined.
std::optional<ScalarMinResult> minimize_scalar_partial(
    const std::function<std::optional<double>(double)>& f,
    double lo, double hi, int grid_points, double tol, ObjectiveTrace* trace);

/// Cholesky solve of the symmetric positive definite system M x = b
/// (M is p x p row-major). log_det, when non-null, receives log det(M).
/// Throws SingularDesignError on a non-positive pivot or pivot ratio < 1e-12.
std::vector<double> solve_spd(std::vector<double> M, std::vector<double> b,
                              int p, double* log_det = nullptr);

}  // namespace detail

}  // namespace sae
