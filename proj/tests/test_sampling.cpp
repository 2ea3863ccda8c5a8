#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "logminor/exact.hpp"
#include "logminor/generators.hpp"
#include "logminor/sampling.hpp"

using namespace logminor;

TEST_CASE("sample_index_set basics") {
    RngStream rng(1);
    IndexSet full = sample_index_set(5, 5, rng);
    CHECK(full.indices() == std::vector<std::size_t>{0, 1, 2, 3, 4});

    IndexSet one = sample_index_set(1, 1, rng);
    CHECK(one.indices() == std::vector<std::size_t>{0});

    CHECK_THROWS_AS(sample_index_set(3, 4, rng), error);
}

TEST_CASE("sample_index_set is uniform over subsets") {
    RngStream rng(2024);
    std::map<std::vector<std::size_t>, std::size_t> counts;
    const std::size_t draws = 60000;
    for (std::size_t i = 0; i < draws; ++i) counts[sample_index_set(4, 2, rng).indices()]++;
    CHECK(counts.size() == 6);
    const double p = 1.0 / 6.0;
    const double sd = std::sqrt(static_cast<double>(draws) * p * (1.0 - p));
    for (const auto& [subset, c] : counts)
        CHECK(std::abs(static_cast<double>(c) - static_cast<double>(draws) * p) < 5.0 * sd);
}

TEST_CASE("sample_logminors") {
    SpdMatrix id = make_spd(Matrix::identity(6));
    LogMinorDistribution d = sample_logminors(id, {3, 50, 9});
    for (double v : d.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));

    SpdMatrix e1 = gen_e1(20, 3.0);
    SamplePlan plan{5, 100000, 4242};
    LogMinorDistribution big = sample_logminors(e1, plan);
    CHECK(big.values.size() == plan.q);
    CHECK(std::abs(big.mean() - 2.747) < 4.0 * std::sqrt(1.191 / 100000.0) + 1e-3);

    // k=1 draws from a diagonal matrix are log-eigenvalues
    SpdMatrix d3 = make_spd_diagonal({5.0, 2.0, 1.0});
    LogMinorDistribution k1 = sample_logminors(d3, {1, 200, 7});
    for (double v : k1.values) {
        const bool known = std::abs(v - std::log(5.0)) < 1e-12 ||
                           std::abs(v - std::log(2.0)) < 1e-12 || std::abs(v) < 1e-12;
        CHECK(known);
    }

    // deterministic per seed
    LogMinorDistribution again = sample_logminors(e1, plan);
    CHECK(again.values == big.values);

    // without replacement: all subsets distinct
    SamplePlan wo{2, 15, 3, /*with_replacement=*/false};
    SpdMatrix d6 = gen_e1(6, 2.0);
    LogMinorDistribution uniq = sample_logminors(d6, wo);
    CHECK(uniq.values.size() == 15);  // C(6,2) = 15, all of them
}

TEST_CASE("estimate_mean_entropy") {
    SpdMatrix id = make_spd(Matrix::identity(8));
    EstimateReport r = estimate_mean_entropy(id, {2, 10, 1});
    CHECK(r.mean_entropy == doctest::Approx(1.0 + std::log(2.0 * M_PI)).epsilon(1e-14));
    CHECK(r.se_logminor.se1 == 0.0);
    CHECK(r.se_logminor.se2 == 0.0);
    CHECK_FALSE(r.cv.has_value());  // ell = 0 for the identity

    SpdMatrix e1 = gen_e1(20, 3.0);
    const std::size_t q = 2000 * 5;
    EstimateReport er = estimate_mean_entropy(e1, {5, q, 77}, 3.0);
    const double expect_se1 = std::sqrt(6.0 * 5.0 * 15.0 / (static_cast<double>(q) * 20.0)) *
                              std::log(3.0);
    CHECK(er.se_logminor.se1 == doctest::Approx(expect_se1).epsilon(1e-12));
    CHECK(er.se_entropy.se1 == doctest::Approx(0.5 * expect_se1).epsilon(1e-12));
    REQUIRE(er.se_logminor.se3.has_value());

    // exact affine relation between the two estimators
    EstimateReport k19 = estimate_mean_entropy(e1, {19, 100, 5});
    CHECK(k19.mean_entropy - 0.5 * k19.mean_logminor ==
          doctest::Approx(9.5 * (1.0 + std::log(2.0 * M_PI))).epsilon(1e-14));

    CHECK_THROWS_AS(estimate_mean_entropy(e1, {5, 10, 1}, 2.0), error);  // kappa_hat < kappa
}

TEST_CASE("empirical_tail") {
    SpdMatrix e1 = gen_e1(20, 3.0);
    ExactSummary ex = enumerate_exact(e1, 1);
    CHECK(empirical_tail(ex.distribution, 0.0) == doctest::Approx(1.0));
    CHECK(empirical_tail(ex.distribution, 0.6) == doctest::Approx(0.0));
    CHECK(empirical_tail(ex.distribution, 0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(empirical_tail(ex.distribution, -0.1), error);
}

TEST_CASE("histogram") {
    SpdMatrix id = make_spd(Matrix::identity(5));
    LogMinorDistribution degenerate = sample_logminors(id, {2, 40, 1});
    auto bins = histogram(degenerate, 10);
    CHECK(bins.size() == 1);  // degenerate-range fallback

    SpdMatrix e1 = gen_e1(20, 3.0);
    ExactSummary ex = enumerate_exact(e1, 5);
    auto h = histogram(ex.distribution, 60);
    std::size_t occupied = 0;
    double integral = 0.0;
    const double width = h[1].center - h[0].center;
    for (const auto& bin : h) {
        if (bin.density > 0.0) ++occupied;
        integral += bin.density * width;
    }
    CHECK(occupied == 6);  // atoms at j log(3), j = 0..5
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact distribution is permutation invariant") {
    SpdMatrix m = haar_conjugate(gen_uniform_spectrum(7, 4.0, 21), 21);
    Matrix p(7);
    const std::size_t perm[] = {4, 1, 6, 0, 2, 5, 3};
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) p(i, j) = m(perm[i], perm[j]);
    SpdMatrix pm = make_spd(p);

    ExactSummary a = enumerate_exact(m, 3);
    ExactSummary b = enumerate_exact(pm, 3);
    std::sort(a.distribution.values.begin(), a.distribution.values.end());
    std::sort(b.distribution.values.begin(), b.distribution.values.end());
    for (std::size_t i = 0; i < a.distribution.values.size(); ++i)
        CHECK(a.distribution.values[i] == doctest::Approx(b.distribution.values[i]).epsilon(1e-10));
}
