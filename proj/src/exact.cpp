#include "logminor/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "logminor/generators.hpp"
#include "logminor/rng.hpp"

namespace logminor {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > UINT64_MAX) fail(errc::too_many_subsets, "binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

// Advances idx to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ExactSummary enumerate_exact(const SpdMatrix& m, std::size_t k, std::uint64_t cap,
                             const ProgressFn& progress) {
    const std::size_t n = m.dim();
    if (k < 1 || k > n) fail(errc::k_too_large, "need 1 <= k <= n");
    const std::uint64_t count = binomial(n, k);
    if (count > cap) fail(errc::too_many_subsets, "C(n,k) exceeds the enumeration cap");

    ExactSummary summary;
    summary.n = n;
    summary.k = k;
    summary.count = count;
    summary.distribution.kind = DistributionKind::exact;
    summary.distribution.k = k;
    summary.distribution.n = n;
    summary.distribution.values.reserve(count);

    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::uint64_t done = 0;
    do {
        summary.distribution.values.push_back(logminor_at(m, idx));
        if (progress && ++done % 100000 == 0) progress(done, count);
    } while (next_combination(idx, n));

    summary.distribution.weights.assign(count, 1.0 / static_cast<double>(count));
    summary.mean = summary.distribution.mean();
    summary.variance = summary.distribution.variance();
    const auto [lo, hi] = std::minmax_element(summary.distribution.values.begin(),
                                              summary.distribution.values.end());
    summary.min = *lo;
    summary.max = *hi;
    return summary;
}

std::pair<double, double> two_level_moments(std::size_t n, std::size_t k, std::size_t ell_split,
                                            double kappa) {
    if (n < 2 || k < 1 || k > n) fail(errc::bad_arguments, "need n >= 2 and 1 <= k <= n");
    if (ell_split < 1 || ell_split > n - 1) fail(errc::bad_arguments, "need 1 <= ell_split <= n-1");
    if (kappa < 1.0) fail(errc::bad_arguments, "kappa must be >= 1");
    const double lk = std::log(kappa);
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double ell = static_cast<double>(ell_split);
    const double mean = kk * (ell / nn) * lk;
    const double variance =
        kk * (nn - kk) / (nn * nn * (nn - 1.0)) * (nn - ell) * ell * lk * lk;
    return {mean, variance};
}

double two_level_max_variance(std::size_t n, std::size_t k, double kappa) {
    double best = 0.0;
    for (std::size_t ell = 1; ell <= n - 1; ++ell)
        best = std::max(best, two_level_moments(n, k, ell, kappa).second);
    return best;
}

ConjectureSearchResult conjecture_search(std::size_t n, std::size_t k, double kappa,
                                         std::size_t trials, std::uint64_t seed,
                                         bool diagonal_trials, std::uint64_t cap) {
    if (trials < 1) fail(errc::bad_arguments, "trials must be >= 1");
    if (binomial(n, k) > cap) fail(errc::too_many_subsets, "C(n,k) exceeds the enumeration cap");

    ConjectureSearchResult result;
    result.diagonal_max = kappa > 1.0 ? two_level_max_variance(n, k, kappa) : 0.0;

    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_stream_seed(seed, "conjecture.trial", t);
        SpdMatrix candidate = [&] {
            if (diagonal_trials) {
                RngStream rng(trial_seed);
                const auto ell = static_cast<std::size_t>(1 + rng.next_below(n - 1));
                return gen_two_level_diagonal(n, kappa, ell);
            }
            SpdMatrix diag = gen_uniform_spectrum(n, kappa, trial_seed);
            return haar_conjugate(diag, trial_seed);
        }();
        const double var = enumerate_exact(candidate, k, cap).variance;
        if (var > result.best_variance || t == 0) {
            result.best_variance = var;
            result.best_trial = t;
            result.witness = candidate;
        }
    }
    result.counterexample = result.best_variance > result.diagonal_max + 1e-9;
    return result;
}

}  // namespace logminor
