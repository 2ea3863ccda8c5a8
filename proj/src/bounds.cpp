#include "logminor/bounds.hpp"

#include <cmath>

namespace logminor {

void BoundContext::validate() const {
    if (k < 1 || k > n) fail(errc::bad_arguments, "need 1 <= k <= n");
    if (kappa_hat < 1.0) fail(errc::bad_arguments, "kappa_hat must be >= 1");
    if (ell_of_m && *ell_of_m < 0.0) fail(errc::bad_arguments, "ell must be >= 0");
    if (q && *q < 1) fail(errc::bad_arguments, "q must be >= 1");
}

double var_bound_thm1(const BoundContext& ctx) {
    ctx.validate();
    const double lk = std::log(ctx.kappa_hat);
    const double nk = static_cast<double>(ctx.k) * static_cast<double>(ctx.n - ctx.k);
    return 6.0 * (nk / static_cast<double>(ctx.n)) * lk * lk;
}

TailValue tail_bound_thm1(const BoundContext& ctx, double r) {
    ctx.validate();
    if (r < 0.0) fail(errc::negative_r, "r must be >= 0");
    if (ctx.k == ctx.n) fail(errc::k_equals_n, "tail undefined at k = n (single minor)");
    const double lk = std::log(ctx.kappa_hat);
    if (lk == 0.0) {
        // kappa_hat = 1: Y is a point mass.
        return r > 0.0 ? TailValue{0.0, 0.0} : TailValue{1.0, 1.0};
    }
    const double nk = static_cast<double>(ctx.k) * static_cast<double>(ctx.n - ctx.k);
    const double raw = 3.0 * std::exp(-(r / lk) * std::sqrt(static_cast<double>(ctx.n) / nk));
    return TailValue{raw, std::min(1.0, raw)};
}

double var_bound_thm2(const BoundContext& ctx, Thm2Variant variant) {
    ctx.validate();
    const double lk = std::log(ctx.kappa_hat);
    const double w = static_cast<double>(ctx.wedge());
    if (variant == Thm2Variant::as_stated) return 0.25 * (w * lk) * (w * lk);
    return 0.25 * w * lk * lk;
}

double support_width_bound(const BoundContext& ctx) {
    ctx.validate();
    return static_cast<double>(ctx.wedge()) * std::log(ctx.kappa_hat);
}

double var_bound_thm3(const BoundContext& ctx) {
    ctx.validate();
    if (!ctx.diagonal) fail(errc::not_diagonal, "Theorem 3 bound applies to diagonal matrices only");
    if (ctx.n < 2) return 0.0;
    const double lk = std::log(ctx.kappa_hat);
    return 0.25 * static_cast<double>(ctx.k) *
           (static_cast<double>(ctx.n - ctx.k) / static_cast<double>(ctx.n - 1)) * lk * lk;
}

TailValue tail_chebyshev(double var_bound, double r) {
    if (var_bound < 0.0) fail(errc::bad_arguments, "variance bound must be >= 0");
    if (!(r > 0.0)) fail(errc::nonpositive_r, "Chebyshev tail needs r > 0");
    const double raw = var_bound / (r * r);
    return TailValue{raw, std::min(1.0, raw)};
}

SeBoundValues se_bounds(const BoundContext& ctx) {
    ctx.validate();
    if (!ctx.q) fail(errc::bad_arguments, "se bounds need a sample count q");
    const double q = static_cast<double>(*ctx.q);
    const double lk = std::log(ctx.kappa_hat);
    const double n = static_cast<double>(ctx.n);
    const double k = static_cast<double>(ctx.k);
    const double nk = k * (n - k);

    SeBoundValues out;
    out.se1 = std::sqrt(6.0 * nk / (q * n)) * lk;
    out.se2 = 0.5 * std::sqrt(static_cast<double>(ctx.wedge()) / q) * lk;
    if (ctx.diagonal && ctx.n >= 2) out.se3 = 0.5 * std::sqrt(nk / (q * (n - 1.0))) * lk;
    return out;
}

CvBoundValues cv_bounds(const BoundContext& ctx) {
    ctx.validate();
    if (!ctx.q) fail(errc::bad_arguments, "cv bounds need a sample count q");
    if (!ctx.ell_of_m || *ctx.ell_of_m == 0.0)
        fail(errc::ell_zero, "cv bounds undefined when ell(M) = 0");
    const double q = static_cast<double>(*ctx.q);
    const double lk = std::log(ctx.kappa_hat);
    const double ell = *ctx.ell_of_m;
    const double n = static_cast<double>(ctx.n);
    const double k = static_cast<double>(ctx.k);
    const double w = static_cast<double>(ctx.wedge());
    const double log2epi = 1.0 + std::log(2.0 * M_PI);  // log(2 e pi)

    CvBoundValues out;
    out.cvy1 = (lk / ell) * std::sqrt(6.0 * (n - k) / (q * k * n));
    out.cvy2 = (lk / (2.0 * ell)) * std::sqrt(w / (q * k * k));
    out.cvh1 = (2.0 * lk / (ell + log2epi)) * std::sqrt(6.0 * (n - k) / (q * k * n));
    out.cvh2 = (lk / (ell + log2epi)) * std::sqrt(w / (q * k * k));
    return out;
}

std::vector<double> concentration_sequence(const std::vector<double>& ks,
                                           const std::vector<double>& ells,
                                           bool* nondecreasing_out) {
    if (ks.size() != ells.size()) fail(errc::length_mismatch, "k and ell lists differ in length");
    std::vector<double> out(ks.size());
    bool nondecreasing = true;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        out[i] = std::sqrt(ks[i]) * ells[i];
        if (i > 0 && out[i] < out[i - 1]) nondecreasing = false;
    }
    if (nondecreasing_out) *nondecreasing_out = nondecreasing;
    return out;
}

double planner_bound_value(const BoundContext& ctx, std::size_t q, PlanMetric metric,
                           BoundChoice choice) {
    BoundContext at = ctx;
    at.q = q;
    switch (metric) {
        case PlanMetric::se_logminor:
        case PlanMetric::se_entropy: {
            SeBoundValues se = se_bounds(at);
            double v;
            if (choice == BoundChoice::b1) {
                v = se.se1;
            } else if (choice == BoundChoice::b2) {
                v = se.se2;
            } else {
                if (!se.se3) fail(errc::not_diagonal, "se3 applies to diagonal matrices only");
                v = *se.se3;
            }
            return metric == PlanMetric::se_entropy ? 0.5 * v : v;
        }
        case PlanMetric::cv_logminor:
        case PlanMetric::cv_entropy: {
            if (choice == BoundChoice::b3)
                fail(errc::bad_arguments, "no third bound for cv metrics");
            CvBoundValues cv = cv_bounds(at);
            if (metric == PlanMetric::cv_logminor)
                return choice == BoundChoice::b1 ? cv.cvy1 : cv.cvy2;
            return choice == BoundChoice::b1 ? cv.cvh1 : cv.cvh2;
        }
    }
    fail(errc::bad_arguments, "unknown metric");
}

std::size_t plan_sample_size(const BoundContext& ctx, double target, PlanMetric metric,
                             BoundChoice choice) {
    ctx.validate();
    if (!(target > 0.0)) fail(errc::unattainable_target, "target must be > 0");

    const double c = planner_bound_value(ctx, 1, metric, choice);
    if (c <= target) return 1;

    std::size_t q = static_cast<std::size_t>(std::ceil((c / target) * (c / target)));
    if (q < 1) q = 1;
    while (planner_bound_value(ctx, q, metric, choice) > target) ++q;
    while (q > 1 && planner_bound_value(ctx, q - 1, metric, choice) <= target) --q;
    return q;
}

BoundSet compute_bounds(const BoundContext& ctx) {
    ctx.validate();
    BoundSet out;
    out.var_thm1 = var_bound_thm1(ctx);
    out.var_thm2_as_stated = var_bound_thm2(ctx, Thm2Variant::as_stated);
    out.var_thm2_table = var_bound_thm2(ctx, Thm2Variant::table);
    out.support_width = support_width_bound(ctx);
    if (ctx.diagonal) out.var_thm3 = var_bound_thm3(ctx);
    if (ctx.q) {
        SeBoundValues se = se_bounds(ctx);
        out.se_logminor = se;
        SeBoundValues half{0.5 * se.se1, 0.5 * se.se2, std::nullopt};
        if (se.se3) half.se3 = 0.5 * *se.se3;
        out.se_entropy = half;
        if (ctx.ell_of_m && *ctx.ell_of_m > 0.0) out.cv = cv_bounds(ctx);
    }
    return out;
}

}  // namespace logminor
