#ifndef LOGMINOR_SAMPLING_HPP
#define LOGMINOR_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "logminor/bounds.hpp"
#include "logminor/rng.hpp"
#include "logminor/spd.hpp"

namespace logminor {

struct SamplePlan {
    std::size_t k = 1;
    std::size_t q = 1;
    std::uint64_t seed = 0;
    bool with_replacement = true;
};

enum class DistributionKind { empirical, exact };

/// Distribution of log-minors of size k: values with matching weights that
/// sum to 1. Exact distributions enumerate every C(n,k) subset; empirical
/// ones hold q Monte Carlo draws with weight 1/q each.
struct LogMinorDistribution {
    std::vector<double> values;
    std::vector<double> weights;
    DistributionKind kind = DistributionKind::empirical;
    std::size_t k = 0;
    std::size_t n = 0;

    double mean() const;
    double variance() const;
};

struct EstimateReport {
    double mean_logminor = 0.0;  // S_Y
    double mean_entropy = 0.0;   // S_h = S_Y/2 + (k/2)(1 + log 2pi)
    std::size_t q = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    double kappa_hat = 1.0;
    SeBoundValues se_logminor;          // bounds on sigma(S_Y)
    SeBoundValues se_entropy;           // each exactly half the S_Y value
    std::optional<CvBoundValues> cv;    // absent when ell(M) == 0
    bool spectrum_straddles_one = false;  // lambda_n < 1 < lambda_1; CV caveat
    std::uint64_t seed = 0;
    std::vector<double> values;  // raw log-minor draws
};

/// Uniform draw over all C(n,k) index sets via partial Fisher-Yates.
IndexSet sample_index_set(std::size_t n, std::size_t k, RngStream& rng);

LogMinorDistribution sample_logminors(const SpdMatrix& m, const SamplePlan& plan);

/// Monte Carlo estimate of E[Y] and mean subsystem entropy with every
/// applicable standard-error and CV bound attached. kappa_hat must be an
/// upper bound on kappa(m); pass nullopt to use the exact condition number.
EstimateReport estimate_mean_entropy(const SpdMatrix& m, const SamplePlan& plan,
                                     std::optional<double> kappa_hat = std::nullopt);

/// P(|Y - mean| >= r) under dist, using the distribution's own mean.
double empirical_tail(const LogMinorDistribution& dist, double r);

struct HistogramBin {
    double center;
    double density;
};

/// Equal-width bins over [min, max]; densities integrate to 1. A degenerate
/// range falls back to a single bin of width 1e-9.
std::vector<HistogramBin> histogram(const LogMinorDistribution& dist, std::size_t bins);

/// Mean subsystem entropy from a mean log-minor (natural log).
double entropy_from_logminor_mean(double mean_logminor, std::size_t k);

}  // namespace logminor

#endif
