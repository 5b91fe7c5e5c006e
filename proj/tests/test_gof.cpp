#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "support/fisher.hpp"
#include "wrapxg/estimate.hpp"
#include "wrapxg/gof.hpp"
#include "wrapxg/io.hpp"

namespace {

using namespace wrapxg;

std::vector<double> plug_in(std::size_t n) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (i + 0.5) / static_cast<double>(n);
    return u;
}

TEST(Kolmogorov, SurvivalFunction) {
    // Alternating series summed by mpmath at 40 digits.
    const std::pair<double, double> frozen[] = {{0.2, 0.99999999999949495927},
                                                {0.3, 0.99999069419866543337},
                                                {0.5, 0.96394524366487509439},
                                                {1.0, 0.2699996716773545212},
                                                {1.36, 0.049485876755377909939},
                                                {2.0, 0.00067092525577969534654}};
    for (auto [x, q] : frozen) EXPECT_NEAR(kolmogorov_pvalue(x), q, 1e-14) << "x=" << x;
    EXPECT_EQ(kolmogorov_pvalue(0.0), 1.0);
    EXPECT_NEAR(kolmogorov_pvalue(std::nextafter(0.3, 0.0)), kolmogorov_pvalue(0.3), 1e-14);
    EXPECT_EQ(kolmogorov_pvalue(50.0), 0.0);
}

TEST(PlugIn, MinimalStatistics) {
    for (std::size_t n : {1u, 7u, 60u}) {
        const auto u = plug_in(n);
        const double nd = static_cast<double>(n);
        EXPECT_NEAR(ks_test(u).statistic, 1.0 / (2.0 * nd), 1e-15);
        EXPECT_NEAR(cvm_stat(u), 1.0 / (12.0 * nd), 1e-15);
        EXPECT_NEAR(watson_u2(u), 1.0 / (12.0 * nd), 1e-15);
    }
    const double half[] = {0.5};
    EXPECT_NEAR(ad_stat(half), 2.0 * std::log(2.0) - 1.0, 1e-15);
    EXPECT_NEAR(ad_stat(half), 0.386294, 5e-7);
}

TEST(Errors, EmptyAndDegenerate) {
    const std::vector<double> none;
    EXPECT_THROW((void)ks_test(none), DataError);
    EXPECT_THROW((void)cvm_stat(none), DataError);
    EXPECT_THROW((void)ad_stat(none), DataError);
    EXPECT_THROW((void)watson_u2(none), DataError);
    const double with_zero[] = {0.0, 0.5};
    const double with_one[] = {0.5, 1.0};
    EXPECT_THROW((void)ad_stat(with_zero), DataError);
    EXPECT_THROW((void)ad_stat(with_one), DataError);
}

TEST(Statistics, OrderInvariant) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 80, 6);
    const WrappedDensity model(WrappedModelKind::WRXG, Rate(1.2));
    auto u = probability_transform(s, model);
    const auto ks = ks_test(u);
    const double w = cvm_stat(u), a = ad_stat(u), w2 = watson_u2(u);
    std::mt19937 gen(1);
    for (int rep = 0; rep < 5; ++rep) {
        std::shuffle(u.begin(), u.end(), gen);
        EXPECT_EQ(ks_test(u).statistic, ks.statistic);
        EXPECT_NEAR(cvm_stat(u), w, 1e-14);
        EXPECT_NEAR(ad_stat(u), a, 1e-13);
        EXPECT_NEAR(watson_u2(u), w2, 1e-14);
    }
}

double model_quantile(const WrappedDensity& model, double p) {
    double lo = 0.0, hi = std::nextafter(kTwoPi, 0.0);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (model.cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

TEST(Statistics, IncreaseWhenPointMovesToLowerDensity) {
    const WrappedDensity model(WrappedModelKind::WRXG, Rate(1.3));
    for (std::size_t n : {20u, 50u}) {
        std::vector<double> theta;
        for (double p : plug_in(n)) theta.push_back(model_quantile(model, p));
        const CircularSample base(theta, AngleUnit::Radians, false);
        for (std::size_t i : {std::size_t{0}, n / 4}) {
            auto moved = theta;
            moved[i] = 6.2;
            const CircularSample t(moved, AngleUnit::Radians, false);
            EXPECT_GT(model.pdf(theta[i]), model.pdf(6.2));
            EXPECT_GT(cvm_stat(t, model), cvm_stat(base, model)) << "n=" << n << " i=" << i;
            EXPECT_GT(ad_stat(t, model), ad_stat(base, model)) << "n=" << n << " i=" << i;
        }
    }
}

TEST(Watson, OriginInvariance) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(0.9), 100, 9);
    const WrappedDensity model(WrappedModelKind::WRXG, Rate(0.9));
    const auto u = probability_transform(s, model);
    const double base = watson_u2(u);
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> shift(0.0, kTwoPi);
    for (int rep = 0; rep < 10; ++rep) {
        // Measuring the model CDF from a new origin delta subtracts F(delta) mod 1.
        const double c = model.cdf(shift(gen));
        std::vector<double> v;
        for (double x : u) {
            const double y = x - c;
            v.push_back(y < 0.0 ? y + 1.0 : y);
        }
        EXPECT_NEAR(watson_u2(v), base, 1e-10);
    }
}

TEST(Watson, BoundedByCramerVonMises) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto s = wrapped_sample(WrappedModelKind::WL, Rate(1.1), 40, seed);
        const WrappedDensity model(WrappedModelKind::WRXG, Rate(1.6));
        EXPECT_LE(watson_u2(s, model), cvm_stat(s, model));
    }
}

TEST(Kolmogorov, LimitLawUnderTrueModel) {
    const WrappedDensity model(WrappedModelKind::WRXG, Rate(1.3));
    std::vector<double> p;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        p.push_back(ks_test(wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 10'000, seed), model).p_value);
    }
    EXPECT_LT(ks_test(p).statistic, 0.05);
}

FitResult fitted(WrappedModelKind kind, const CircularSample& s) { return fit_mle(kind, s); }

TEST(Report, BundlesStatistics) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 60, 2);
    for (auto kind : kAllWrappedModels) {
        const auto fit = fitted(kind, s);
        const auto r = gof_report(kind, s, fit);
        const WrappedDensity model(kind, fit.lambda_hat);
        EXPECT_EQ(r.model, kind);
        EXPECT_EQ(r.n, 60u);
        EXPECT_EQ(r.ks_statistic, ks_test(s, model).statistic);
        EXPECT_EQ(r.cvm, cvm_stat(s, model));
        EXPECT_EQ(r.anderson_darling, ad_stat(s, model));
        EXPECT_EQ(r.watson, watson_u2(s, model));
        EXPECT_GE(r.ks_p_value, 0.0);
        EXPECT_LE(r.ks_p_value, 1.0);
        EXPECT_GE(r.watson, 0.0);
        EXPECT_LE(r.watson, r.cvm);
    }
    const auto fit = fitted(WrappedModelKind::WE, s);
    EXPECT_THROW((void)gof_report(WrappedModelKind::WRXG, s, fit), DomainError);
}

TEST(Report, SelfConsistencyUnderTrueModel) {
    int accepted = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 60, 500 + seed);
        const auto r = gof_report(WrappedModelKind::WRXG, s, fitted(WrappedModelKind::WRXG, s));
        accepted += r.ks_p_value > 0.05 ? 1 : 0;
    }
    EXPECT_GE(accepted, 90);
}

class FisherB5 : public ::testing::Test {
protected:
    void SetUp() override {
        const auto path = test_support::fisher_b5_path();
        if (!path) GTEST_SKIP() << "Fisher B5 data file not available";
        sample_.emplace(ingest(*path, AngleUnit::Degrees, false));
    }
    GofReport report(WrappedModelKind kind) const { return gof_report(kind, *sample_, fitted(kind, *sample_)); }
    std::optional<CircularSample> sample_;
};

TEST_F(FisherB5, PublishedStatistics) {
    const auto wrxg = report(WrappedModelKind::WRXG);
    EXPECT_NEAR(wrxg.ks_statistic, 0.1042, 0.002);
    EXPECT_NEAR(wrxg.ks_p_value, 0.5323, 0.02);
    EXPECT_NEAR(wrxg.cvm, 0.1046, 0.002);
    EXPECT_NEAR(wrxg.anderson_darling, 0.9258, 0.01);
    const auto wl = report(WrappedModelKind::WL);
    EXPECT_NEAR(wl.cvm, 0.1199, 0.002);
    const auto we = report(WrappedModelKind::WE);
    EXPECT_NEAR(we.ks_statistic, 0.1165, 0.002);
    EXPECT_NEAR(we.anderson_darling, 1.1247, 0.01);
    EXPECT_LE(wrxg.watson, wl.watson);
    EXPECT_LE(wl.watson, we.watson);
}

}  // namespace
