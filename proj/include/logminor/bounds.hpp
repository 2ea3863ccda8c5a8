#ifndef LOGMINOR_BOUNDS_HPP
#define LOGMINOR_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "logminor/errors.hpp"

namespace logminor {

inline constexpr double kEntropyOffsetPerVariable = 2.837877066409345;  // 1 + log(2*pi)

struct BoundContext {
    std::size_t n = 1;
    std::size_t k = 1;
    double kappa_hat = 1.0;  // upper bound on kappa(M)
    bool diagonal = false;
    std::optional<double> ell_of_m;   // min(|log lambda_1|, |log lambda_n|)
    std::optional<std::size_t> q;     // sample count, for SE/CV bounds

    std::size_t wedge() const { return k < n - k ? k : n - k; }
    void validate() const;
};

struct TailValue {
    double raw;       // bound as evaluated; may exceed 1 near r = 0
    double reported;  // clamped to [0, 1]
};

enum class Thm2Variant {
    as_stated,  // (wedge * log kappa)^2 / 4, the typeset quadratic form
    table,      // wedge * (log kappa)^2 / 4, the form the numerics use
};

struct SeBoundValues {
    double se1 = 0.0;
    double se2 = 0.0;
    std::optional<double> se3;  // diagonal matrices only
};

struct CvBoundValues {
    double cvy1 = 0.0;
    double cvy2 = 0.0;
    double cvh1 = 0.0;
    double cvh2 = 0.0;
};

/// Every bound applicable to a context, evaluated in one shot.
struct BoundSet {
    double var_thm1 = 0.0;
    double var_thm2_as_stated = 0.0;
    double var_thm2_table = 0.0;
    std::optional<double> var_thm3;
    double support_width = 0.0;
    std::optional<SeBoundValues> se_logminor;  // present when q given
    std::optional<SeBoundValues> se_entropy;   // exactly half the above
    std::optional<CvBoundValues> cv;           // present when q and ell given, ell > 0
};

// Variance bound 6 (k(n-k)/n) (log kappa_hat)^2.
double var_bound_thm1(const BoundContext& ctx);

// Tail bound 3 exp(-(r / log kappa_hat) sqrt(n / (k(n-k)))). Degenerate at
// kappa_hat = 1 (point mass); throws for k = n where the exponent is undefined.
TailValue tail_bound_thm1(const BoundContext& ctx, double r);

double var_bound_thm2(const BoundContext& ctx, Thm2Variant variant);

// Support width bound wedge * log kappa_hat.
double support_width_bound(const BoundContext& ctx);

// Diagonal-only variance bound (k/4)((n-k)/(n-1)) (log kappa_hat)^2.
double var_bound_thm3(const BoundContext& ctx);

// Chebyshev tail min(1, var/r^2) from any variance bound.
TailValue tail_chebyshev(double var_bound, double r);

SeBoundValues se_bounds(const BoundContext& ctx);

CvBoundValues cv_bounds(const BoundContext& ctx);

// a_i = sqrt(k_i) * ell_i; nondecreasing_out reports monotonicity when given.
std::vector<double> concentration_sequence(const std::vector<double>& ks,
                                           const std::vector<double>& ells,
                                           bool* nondecreasing_out = nullptr);

enum class PlanMetric { se_logminor, se_entropy, cv_logminor, cv_entropy };
enum class BoundChoice { b1, b2, b3 };

// Smallest q >= 1 with bound(q) <= target. Every bound here is c / sqrt(q),
// so q = ceil((c/target)^2), then verified by re-evaluation.
std::size_t plan_sample_size(const BoundContext& ctx, double target, PlanMetric metric,
                             BoundChoice choice);

// Evaluates the chosen planner bound at sample count q.
double planner_bound_value(const BoundContext& ctx, std::size_t q, PlanMetric metric,
                           BoundChoice choice);

BoundSet compute_bounds(const BoundContext& ctx);

}  // namespace logminor

#endif
