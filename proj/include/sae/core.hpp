#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sae {

/// Per-area sample summary together with the known population-side
/// quantities. The covariate dimension p is the length of xbar/Xbar.
struct AreaSummary {
    int n = 0;                    ///< sample size
    double ybar = 0.0;            ///< sample mean of y
    std::vector<double> xbar;     ///< sample covariate means
    std::optional<double> s2;     ///< sample variance of y, divisor n-1 (needs n >= 2)
    std::vector<double> Xbar;     ///< population covariate means
    std::int64_t N = 0;           ///< population size
    std::optional<double> D;      ///< known sampling variance of ybar
};

/// Unit-level finite population with a single covariate per unit. Generated
/// latents are retained so diagnostics can compare realized values against
/// what was drawn.
struct FinitePopulation {
    struct Area {
        std::int64_t N = 0;
        std::vector<double> x;
        std::vector<double> y;
        std::optional<double> v;          ///< area random effect, if generated
        std::optional<double> sigma2_e;   ///< unit error variance, if generated
    };
    std::vector<Area> areas;

    int area_count() const { return static_cast<int>(areas.size()); }
};

struct PopulationSummary {
    double Xbar = 0.0;
    double Ybar = 0.0;
    double S2 = 0.0;  ///< population variance of y, divisor N-1
};

/// Survey samples for m areas: the sampled unit values plus stored summaries.
/// Summaries are stored rather than recomputed so an experiment can override
/// xbar without touching the raw units; xbar_overridden records that the
/// round-trip invariant no longer holds.
struct SurveyData {
    struct AreaSample {
        std::string label;          ///< optional external area id
        std::vector<double> y;
        std::vector<double> x;      ///< row-major n x p
        AreaSummary summary;
    };

    int p = 1;
    std::vector<AreaSample> areas;
    bool xbar_overridden = false;

    int area_count() const { return static_cast<int>(areas.size()); }
};

enum class EstimatorKind { Direct, ObpUc, ObpFh, ObpUnit, Eblup, Oracle };

const char* estimator_name(EstimatorKind kind);
std::optional<EstimatorKind> estimator_from_name(std::string_view name);

struct PredictionSet {
    EstimatorKind tag = EstimatorKind::Direct;
    std::vector<double> theta;  ///< predicted area means, length m
};

/// Fitted parameters of one estimator. gamma = sigma_v^2/sigma_e^2 for
/// unit-level and unit-context fits; A is the area-level variance for FH
/// fits. B holds the per-area shrinkage weights at the fitted parameters.
struct FitParams {
    std::vector<double> beta;
    std::optional<double> gamma;
    std::optional<double> A;
    std::optional<double> sigma_v2;
    std::optional<double> sigma_e2;
    std::vector<double> B;
    double objective = 0.0;
    bool converged = false;
    int evaluations = 0;
};

/// Sample summary for one area. x is row-major n x p; Xbar must have length
/// p. Throws std::invalid_argument on a length mismatch or n < 2.
AreaSummary summarize_area(const std::vector<double>& y,
                           const std::vector<double>& x, int p,
                           std::vector<double> Xbar, std::int64_t N);

/// Exact per-area population means and variances (divisor N-1).
std::vector<PopulationSummary> population_summaries(const FinitePopulation& pop);

}  // namespace sae
