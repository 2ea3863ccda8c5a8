#ifndef LOGMINOR_EXACT_HPP
#define LOGMINOR_EXACT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "logminor/sampling.hpp"
#include "logminor/spd.hpp"

namespace logminor {

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// C(n, k); fails with too_many_subsets on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct ExactSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t count = 0;  // C(n, k)
    double mean = 0.0;
    double variance = 0.0;
    double min = 0.0;
    double max = 0.0;
    LogMinorDistribution distribution;  // kind == exact
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// Iterates all C(n,k) index sets in lexicographic order and accumulates exact
// moments with compensated two-pass summation. Fails when C(n,k) exceeds cap.
ExactSummary enumerate_exact(const SpdMatrix& m, std::size_t k,
                             std::uint64_t cap = kDefaultSubsetCap,
                             const ProgressFn& progress = nullptr);

// Closed-form moments of the log-minor of a diagonal matrix with ell_split
// eigenvalues at kappa and n - ell_split at 1: a kappa-scaled hypergeometric.
// mean = k (ell/n) log kappa,
// var  = k(n-k)/(n^2 (n-1)) * (n-ell) ell (log kappa)^2.
std::pair<double, double> two_level_moments(std::size_t n, std::size_t k, std::size_t ell_split,
                                            double kappa);

/// Largest two-level variance over all splits 1 <= ell <= n-1.
double two_level_max_variance(std::size_t n, std::size_t k, double kappa);

struct ConjectureSearchResult {
    double best_variance = 0.0;   // largest exact variance among trials
    double diagonal_max = 0.0;    // max over ell of the two-level closed form
    bool counterexample = false;  // best_variance > diagonal_max + 1e-9
    std::size_t best_trial = 0;
    std::optional<SpdMatrix> witness;
};

// Randomized search for a violation of "diagonal matrices maximize log-minor
// variance": trials draw spectra {kappa, 1} plus uniform values on [1, kappa],
// Haar-conjugated. With diagonal_trials, each trial is instead a two-level
// diagonal matrix with a random split, enumerated exactly.
ConjectureSearchResult conjecture_search(std::size_t n, std::size_t k, double kappa,
                                         std::size_t trials, std::uint64_t seed,
                                         bool diagonal_trials = false,
                                         std::uint64_t cap = kDefaultSubsetCap);

}  // namespace logminor

#endif
