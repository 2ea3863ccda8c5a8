#include "logminor/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace logminor {

namespace {

constexpr std::size_t kDrawsPerChunk = 1024;  // RNG stream granularity

double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

double LogMinorDistribution::mean() const {
    if (values.empty()) fail(errc::empty_distribution, "empty distribution");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double y = values[i] * weights[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double LogMinorDistribution::variance() const {
    const double mu = mean();
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - mu;
        const double y = d * d * weights[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

IndexSet sample_index_set(std::size_t n, std::size_t k, RngStream& rng) {
    if (k < 1 || k > n) fail(errc::k_too_large, "need 1 <= k <= n");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.next_below(n - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> picked(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(picked.begin(), picked.end());
    return IndexSet(std::move(picked), n);
}

LogMinorDistribution sample_logminors(const SpdMatrix& m, const SamplePlan& plan) {
    const std::size_t n = m.dim();
    if (plan.k < 1 || plan.k > n) fail(errc::k_too_large, "need 1 <= k <= n");
    if (plan.q < 1) fail(errc::bad_arguments, "q must be >= 1");

    LogMinorDistribution dist;
    dist.kind = DistributionKind::empirical;
    dist.k = plan.k;
    dist.n = n;
    dist.values.reserve(plan.q);

    std::set<std::vector<std::size_t>> seen;  // without-replacement mode only
    RngStream rng = RngStream::derived(plan.seed, "sample.chunk", 0);
    std::size_t chunk = 0;
    std::size_t draws_in_chunk = 0;
    std::size_t rejects = 0;
    while (dist.values.size() < plan.q) {
        if (draws_in_chunk == kDrawsPerChunk) {
            rng = RngStream::derived(plan.seed, "sample.chunk", ++chunk);
            draws_in_chunk = 0;
        }
        IndexSet idx = sample_index_set(n, plan.k, rng);
        ++draws_in_chunk;
        if (!plan.with_replacement) {
            if (!seen.insert(idx.indices()).second) {
                if (++rejects > 1000 * plan.q + 1000000)
                    fail(errc::bad_arguments, "cannot draw q distinct subsets");
                continue;
            }
        }
        dist.values.push_back(logminor_at(m, idx.indices()));
    }
    dist.weights.assign(plan.q, 1.0 / static_cast<double>(plan.q));
    return dist;
}

double entropy_from_logminor_mean(double mean_logminor, std::size_t k) {
    return 0.5 * mean_logminor + 0.5 * static_cast<double>(k) * kEntropyOffsetPerVariable;
}

EstimateReport estimate_mean_entropy(const SpdMatrix& m, const SamplePlan& plan,
                                     std::optional<double> kappa_hat) {
    const double kappa = m.condition_number();
    double khat = kappa_hat.value_or(kappa);
    if (khat < kappa * (1.0 - 1e-9))
        fail(errc::kappa_hat_too_small, "kappa_hat is below the matrix condition number");
    khat = std::max(khat, 1.0);

    LogMinorDistribution dist = sample_logminors(m, plan);
    const double s_y = kahan_sum(dist.values) / static_cast<double>(plan.q);

    EstimateReport report;
    report.mean_logminor = s_y;
    report.mean_entropy = entropy_from_logminor_mean(s_y, plan.k);
    report.q = plan.q;
    report.k = plan.k;
    report.n = m.dim();
    report.kappa_hat = khat;
    report.seed = plan.seed;
    report.values = std::move(dist.values);

    BoundContext ctx;
    ctx.n = m.dim();
    ctx.k = plan.k;
    ctx.kappa_hat = khat;
    ctx.diagonal = m.is_diagonal();
    ctx.ell_of_m = m.ell();
    ctx.q = plan.q;
    BoundSet bounds = compute_bounds(ctx);
    report.se_logminor = *bounds.se_logminor;
    report.se_entropy = *bounds.se_entropy;
    report.cv = bounds.cv;

    const auto& eig = m.spectrum().eigenvalues;
    report.spectrum_straddles_one = eig.back() < 1.0 && eig.front() > 1.0;
    return report;
}

double empirical_tail(const LogMinorDistribution& dist, double r) {
    if (r < 0.0) fail(errc::negative_r, "r must be >= 0");
    const double mu = dist.mean();
    double p = 0.0;
    for (std::size_t i = 0; i < dist.values.size(); ++i) {
        if (std::abs(dist.values[i] - mu) >= r - 1e-12) p += dist.weights[i];
    }
    return std::min(p, 1.0);
}

std::vector<HistogramBin> histogram(const LogMinorDistribution& dist, std::size_t bins) {
    if (bins < 1) fail(errc::bad_arguments, "bins must be >= 1");
    if (dist.values.empty()) fail(errc::empty_distribution, "empty distribution");

    const auto [lo_it, hi_it] = std::minmax_element(dist.values.begin(), dist.values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (hi == lo) {  // degenerate range fallback
        lo -= 0.5e-9;
        hi += 0.5e-9;
        bins = 1;
    }
    const double width = (hi - lo) / static_cast<double>(bins);

    std::vector<double> mass(bins, 0.0);
    for (std::size_t i = 0; i < dist.values.size(); ++i) {
        auto b = static_cast<std::size_t>((dist.values[i] - lo) / width);
        if (b >= bins) b = bins - 1;
        mass[b] += dist.weights[i];
    }

    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b].center = lo + (static_cast<double>(b) + 0.5) * width;
        out[b].density = mass[b] / width;
    }
    return out;
}

}  // namespace logminor
