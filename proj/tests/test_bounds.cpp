#include <doctest.h>

#include <cmath>

#include "logminor/bounds.hpp"

using namespace logminor;

namespace {

BoundContext ctx(std::size_t n, std::size_t k, double kappa_hat, bool diagonal = false) {
    BoundContext c;
    c.n = n;
    c.k = k;
    c.kappa_hat = kappa_hat;
    c.diagonal = diagonal;
    return c;
}

}  // namespace

TEST_CASE("variance bound from the tail theorem") {
    CHECK(std::abs(var_bound_thm1(ctx(20, 1, 3.0)) - 6.880) < 5e-4);
    CHECK(std::abs(var_bound_thm1(ctx(20, 5, 3.0)) - 27.156) < 5e-4);
    CHECK(std::abs(var_bound_thm1(ctx(20, 10, 3.0)) - 36.208) < 5e-4);
    CHECK(var_bound_thm1(ctx(12, 12, 3.0)) == 0.0);
}

TEST_CASE("exponential tail bound") {
    TailValue at0 = tail_bound_thm1(ctx(20, 5, 3.0), 0.0);
    CHECK(at0.raw == doctest::Approx(3.0));
    CHECK(at0.reported == doctest::Approx(1.0));

    const double r = std::log(3.0) * std::sqrt(100.0 / 20.0);
    TailValue mid = tail_bound_thm1(ctx(20, 10, 3.0), r);
    CHECK(mid.raw == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(mid.reported == doctest::Approx(1.0));

    CHECK(tail_bound_thm1(ctx(20, 10, 3.0), 1e6).reported == doctest::Approx(0.0));

    // point mass at kappa_hat = 1
    CHECK(tail_bound_thm1(ctx(20, 10, 1.0), 0.5).reported == 0.0);
    CHECK(tail_bound_thm1(ctx(20, 10, 1.0), 0.0).reported == 1.0);

    CHECK_THROWS_AS(tail_bound_thm1(ctx(20, 20, 3.0), 1.0), error);
    CHECK_THROWS_AS(tail_bound_thm1(ctx(20, 5, 3.0), -1.0), error);
}

TEST_CASE("support-theorem variance bound, both variants") {
    CHECK(std::abs(var_bound_thm2(ctx(20, 1, 3.0), Thm2Variant::as_stated) - 0.302) < 5e-4);
    CHECK(std::abs(var_bound_thm2(ctx(20, 1, 3.0), Thm2Variant::table) - 0.302) < 5e-4);
    CHECK(std::abs(var_bound_thm2(ctx(20, 5, 3.0), Thm2Variant::table) - 1.509) < 5e-4);
    const double lk = std::log(3.0);
    CHECK(var_bound_thm2(ctx(20, 5, 3.0), Thm2Variant::as_stated) ==
          doctest::Approx(25.0 * lk * lk / 4.0).epsilon(1e-12));
}

TEST_CASE("support width bound") {
    CHECK(support_width_bound(ctx(20, 1, 3.0)) == doctest::Approx(std::log(3.0)));
    CHECK(support_width_bound(ctx(20, 10, 3.0)) == doctest::Approx(10.0 * std::log(3.0)));
    CHECK(support_width_bound(ctx(20, 10, 1.0)) == 0.0);
}

TEST_CASE("diagonal variance bound") {
    CHECK(std::abs(var_bound_thm3(ctx(20, 5, 3.0, true)) - 1.191) < 5e-4);
    CHECK(std::abs(var_bound_thm3(ctx(20, 10, 3.0, true)) - 1.588) < 5e-4);
    CHECK(std::abs(var_bound_thm3(ctx(20, 19, 3.0, true)) - 0.302) < 5e-4);
    CHECK_THROWS_AS(var_bound_thm3(ctx(20, 5, 3.0, false)), error);
}

TEST_CASE("Chebyshev tail") {
    CHECK(tail_chebyshev(0.302, 0.549).reported == doctest::Approx(1.0));
    CHECK(tail_chebyshev(0.302, 0.550).reported ==
          doctest::Approx(0.302 / (0.550 * 0.550)).epsilon(1e-12));
    CHECK(tail_chebyshev(0.0, 5.0).reported == 0.0);
    CHECK(tail_chebyshev(1.0, 2.0).reported == doctest::Approx(0.25));
    CHECK_THROWS_AS(tail_chebyshev(1.0, 0.0), error);
}

TEST_CASE("standard-error bounds") {
    BoundContext c = ctx(100000, 5, 3.0, true);
    c.q = 2000 * 5;
    SeBoundValues se = se_bounds(c);
    // large-n limit of the first bound
    CHECK(se.se1 == doctest::Approx(std::sqrt(6.0 * 5.0 / 10000.0) * std::log(3.0)).epsilon(1e-3));
    CHECK(se.se1 == doctest::Approx(0.0602).epsilon(1e-2));
    REQUIRE(se.se3.has_value());

    BoundContext full = ctx(10, 10, 3.0, true);
    full.q = 100;
    SeBoundValues se_full = se_bounds(full);
    CHECK(se_full.se1 == 0.0);
    CHECK(*se_full.se3 == 0.0);

    BoundContext unit = ctx(10, 4, 1.0, true);
    unit.q = 100;
    SeBoundValues se_unit = se_bounds(unit);
    CHECK(se_unit.se1 == 0.0);
    CHECK(se_unit.se2 == 0.0);
    CHECK(*se_unit.se3 == 0.0);
}

TEST_CASE("coefficient-of-variation bounds") {
    BoundContext c = ctx(400, 40, 3.0);
    c.q = 2000 * 40;
    c.ell_of_m = 1.0;
    CvBoundValues cv = cv_bounds(c);
    CHECK(cv.cvy2 ==
          doctest::Approx(0.5 * std::log(3.0) * std::sqrt(40.0 / (80000.0 * 1600.0)))
              .epsilon(1e-12));
    CHECK(cv.cvy2 == doctest::Approx(3.07e-4).epsilon(1e-2));

    // doubling q divides each bound by sqrt(2)
    BoundContext c2 = c;
    c2.q = 2 * *c.q;
    CvBoundValues cv2 = cv_bounds(c2);
    CHECK(cv2.cvy1 == doctest::Approx(cv.cvy1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cv2.cvh2 == doctest::Approx(cv.cvh2 / std::sqrt(2.0)).epsilon(1e-12));

    BoundContext full = ctx(40, 40, 3.0);
    full.q = 100;
    full.ell_of_m = 1.0;
    CvBoundValues cvf = cv_bounds(full);
    CHECK(cvf.cvy1 == 0.0);
    CHECK(cvf.cvy2 == 0.0);
    CHECK(cvf.cvh1 == 0.0);
    CHECK(cvf.cvh2 == 0.0);

    BoundContext zero = ctx(10, 3, 3.0);
    zero.q = 10;
    zero.ell_of_m = 0.0;
    CHECK_THROWS_AS(cv_bounds(zero), error);
}

TEST_CASE("concentration criterion sequence") {
    bool nondecreasing = false;
    auto a = concentration_sequence({1, 4, 9}, {1, 1, 1}, &nondecreasing);
    CHECK(a == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(nondecreasing);

    auto b = concentration_sequence({4, 1}, {1, 1}, &nondecreasing);
    CHECK(b[0] == doctest::Approx(2.0));
    CHECK(b[1] == doctest::Approx(1.0));
    CHECK_FALSE(nondecreasing);

    auto z = concentration_sequence({9}, {0}, nullptr);
    CHECK(z[0] == 0.0);

    CHECK_THROWS_AS(concentration_sequence({1, 2}, {1}, nullptr), error);
}

TEST_CASE("sample-size planner") {
    BoundContext c = ctx(20, 5, 3.0);
    const std::size_t q = plan_sample_size(c, 0.05, PlanMetric::se_logminor, BoundChoice::b2);
    CHECK(q == 604);
    CHECK(planner_bound_value(c, q, PlanMetric::se_logminor, BoundChoice::b2) <= 0.05);
    CHECK(planner_bound_value(c, q - 1, PlanMetric::se_logminor, BoundChoice::b2) > 0.05);

    // half-target on the entropy side gives the same q
    CHECK(plan_sample_size(c, 0.025, PlanMetric::se_entropy, BoundChoice::b2) == 604);

    BoundContext unit = ctx(20, 5, 1.0);
    CHECK(plan_sample_size(unit, 1e-9, PlanMetric::se_logminor, BoundChoice::b1) == 1);

    CHECK_THROWS_AS(plan_sample_size(c, 0.0, PlanMetric::se_logminor, BoundChoice::b1), error);

    // postcondition across a grid of targets and contexts
    for (double target : {0.3, 0.1, 0.03, 0.011}) {
        for (std::size_t k : {1, 3, 9}) {
            BoundContext g = ctx(12, k, 2.5, true);
            g.ell_of_m = 0.7;
            for (PlanMetric metric :
                 {PlanMetric::se_logminor, PlanMetric::se_entropy, PlanMetric::cv_logminor}) {
                for (BoundChoice choice : {BoundChoice::b1, BoundChoice::b2}) {
                    const std::size_t qq = plan_sample_size(g, target, metric, choice);
                    CHECK(planner_bound_value(g, qq, metric, choice) <= target);
                    if (qq >= 2)
                        CHECK(planner_bound_value(g, qq - 1, metric, choice) > target);
                }
            }
        }
    }
}

TEST_CASE("bound orderings") {
    // diagonal bound below the table-variant support bound across a grid
    for (std::size_t n : {4, 9, 20, 41}) {
        for (std::size_t k = 1; k <= n; ++k) {
            BoundContext c = ctx(n, k, 3.0, true);
            CHECK(var_bound_thm3(c) <= var_bound_thm2(c, Thm2Variant::table) + 1e-12);
        }
    }

    // large-n ratio between the two general bounds approaches 24
    BoundContext big = ctx(10000, 5, 3.0);
    const double ratio = var_bound_thm1(big) / var_bound_thm2(big, Thm2Variant::table);
    CHECK(std::abs(ratio - 24.0) / 24.0 < 0.01);
}

TEST_CASE("compute_bounds assembles a consistent set") {
    BoundContext c = ctx(20, 5, 3.0, true);
    c.q = 1000;
    c.ell_of_m = 0.0;
    BoundSet b = compute_bounds(c);
    REQUIRE(b.var_thm3.has_value());
    REQUIRE(b.se_logminor.has_value());
    REQUIRE(b.se_entropy.has_value());
    CHECK(b.se_entropy->se1 == doctest::Approx(0.5 * b.se_logminor->se1));
    CHECK(b.se_entropy->se2 == doctest::Approx(0.5 * b.se_logminor->se2));
    CHECK_FALSE(b.cv.has_value());  // ell = 0

    c.ell_of_m = 1.0;
    BoundSet b2 = compute_bounds(c);
    CHECK(b2.cv.has_value());
}
