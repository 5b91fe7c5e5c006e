#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/fisher.hpp"
#include "wrapxg/estimate.hpp"
#include "wrapxg/io.hpp"
#include "wrapxg/trig_moments.hpp"

namespace {

using namespace wrapxg;
using std::numbers::pi;

TEST(Criteria, PublishedRow) {
    const auto c = information_criteria(-156.0570 / 2.0, 1, 60);
    EXPECT_NEAR(c.aic, 158.0570, 1e-9);
    EXPECT_NEAR(c.caic, 158.0570 + 4.0 / 58.0, 1e-9);
    EXPECT_NEAR(c.caic, 158.1260, 1e-4);
    EXPECT_NEAR(c.bic, 156.0570 + std::log(60.0), 1e-9);
    EXPECT_NEAR(c.hqic, 156.0570 + 2.0 * std::log(std::log(60.0)), 1e-9);

    EXPECT_NEAR(information_criteria(-159.4301 / 2.0, 1, 60).aic, 161.4301, 1e-9);
}

TEST(Criteria, DegenerateZeroCase) {
    const auto c = information_criteria(0.0, 0, 3);
    EXPECT_EQ(c.aic, 0.0);
    EXPECT_EQ(c.caic, 0.0);
    EXPECT_EQ(c.bic, 0.0);
    EXPECT_EQ(c.hqic, 0.0);
}

TEST(Criteria, Preconditions) {
    EXPECT_THROW((void)information_criteria(-1.0, 1, 2), DomainError);
    EXPECT_THROW((void)information_criteria(-1.0, 2, 3), DomainError);
    EXPECT_THROW((void)information_criteria(-1.0, -1, 30), DomainError);
    EXPECT_NO_THROW((void)information_criteria(-1.0, 1, 3));
}

TEST(LogLikelihood, SingleObservation) {
    const CircularSample s({pi}, AngleUnit::Radians, false);
    EXPECT_NEAR(log_likelihood(WrappedModelKind::WRXG, Rate(1.0), s), std::log(wrxg_pdf(Angle(pi), Rate(1.0))), 1e-15);
}

TEST(LogLikelihood, IsPerObservationSum) {
    const auto s = wrapped_sample(WrappedModelKind::WL, Rate(0.9), 200, 4);
    for (auto kind : kAllWrappedModels) {
        double expected = 0.0;
        for (double t : s.angles()) expected += std::log(wrapped_pdf(kind, Angle(t), Rate(0.9)));
        EXPECT_NEAR(log_likelihood(kind, Rate(0.9), s), expected, 1e-9);
    }
}

TEST(Fit, LocalMaximality) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 60, 21);
    for (auto kind : kAllWrappedModels) {
        const auto fit = fit_mle(kind, s);
        ASSERT_FALSE(fit.boundary());
        const double l = fit.lambda_hat.value();
        EXPECT_NEAR(fit.log_lik, log_likelihood(kind, fit.lambda_hat, s), 1e-9);
        for (double f : {0.99, 0.999, 1.001, 1.01}) {
            EXPECT_LE(log_likelihood(kind, Rate(l * f), s), fit.log_lik + 1e-12);
        }
        EXPECT_EQ(fit.n, 60u);
        ASSERT_TRUE(fit.criteria.has_value());
        EXPECT_NEAR(fit.criteria->aic, -2.0 * fit.log_lik + 2.0, 1e-12);
        EXPECT_GT(fit.std_error, 0.0);
        EXPECT_NEAR(fit.std_error, 1.0 / std::sqrt(observed_information(kind, fit.lambda_hat, s)), 1e-15);
    }
}

TEST(Fit, LargeSampleConsistency) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(2.5), 100'000, 8);
    const auto fit = fit_mle(WrappedModelKind::WRXG, s);
    EXPECT_NEAR(fit.lambda_hat.value(), 2.5, 0.05);
    EXPECT_EQ(fit.status, FitStatus::Converged);
}

TEST(Fit, ScoreVanishesAtOptimum) {
    for (auto kind : kAllWrappedModels) {
        for (double l : {0.7, 2.5, 6.0}) {
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                const auto s = wrapped_sample(kind, Rate(l), 500, seed);
                const auto fit = fit_mle(kind, s);
                if (fit.boundary()) continue;
                const double lh = fit.lambda_hat.value();
                const double h = 1e-6 * lh;
                const double score =
                    (log_likelihood(kind, Rate(lh + h), s) - log_likelihood(kind, Rate(lh - h), s)) / (2.0 * h);
                EXPECT_LT(std::abs(score), 1e-4 * std::abs(fit.log_lik)) << to_string(kind) << " lambda=" << l;
            }
        }
    }
}

TEST(Fit, ReparameterizationAgrees) {
    FitConfig direct;
    direct.parameterization = Parameterization::Rate;
    for (auto kind : kAllWrappedModels) {
        for (double l : {0.4, 1.3, 5.0}) {
            const auto s = wrapped_sample(kind, Rate(l), 300, 17);
            const auto a = fit_mle(kind, s);
            const auto b = fit_mle(kind, s, direct);
            EXPECT_NEAR(a.lambda_hat.value(), b.lambda_hat.value(), 1e-6 * a.lambda_hat.value())
                << to_string(kind) << " lambda=" << l;
        }
    }
}

TEST(Fit, RankingIsSharedAcrossCriteria) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.3), 60, 5);
    std::vector<std::pair<double, int>> aic, caic, bic, hqic;
    int i = 0;
    for (auto kind : kAllWrappedModels) {
        const auto c = *fit_mle(kind, s).criteria;
        aic.emplace_back(c.aic, i);
        caic.emplace_back(c.caic, i);
        bic.emplace_back(c.bic, i);
        hqic.emplace_back(c.hqic, i);
        ++i;
    }
    for (auto* v : {&aic, &caic, &bic, &hqic}) std::sort(v->begin(), v->end());
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(aic[j].second, caic[j].second);
        EXPECT_EQ(aic[j].second, bic[j].second);
        EXPECT_EQ(aic[j].second, hqic[j].second);
    }
}

TEST(Fit, BoundaryFlags) {
    // Nearly uniform angles push the rate towards zero.
    std::vector<double> even;
    for (int i = 0; i < 40; ++i) even.push_back(kTwoPi * (i + 0.5) / 40.0);
    const auto fit = fit_mle(WrappedModelKind::WE, CircularSample(even, AngleUnit::Radians, false));
    EXPECT_EQ(fit.status, FitStatus::LowerBoundary);
    EXPECT_TRUE(fit.boundary());
    EXPECT_NEAR(fit.lambda_hat.value(), 1e-3, 1e-9);

    // Tightly clustered at zero pushes it to the upper bound.
    const std::vector<double> tight(10, 1e-9);
    FitConfig small;
    small.upper = 50.0;
    const auto hi = fit_mle(WrappedModelKind::WRXG, CircularSample(tight, AngleUnit::Radians, false), small);
    EXPECT_EQ(hi.status, FitStatus::UpperBoundary);
    EXPECT_NEAR(hi.lambda_hat.value(), 50.0, 50.0 * 1e-6);

    EXPECT_EQ(to_string(FitStatus::LowerBoundary), "lower_boundary");
}

TEST(Fit, InvalidConfig) {
    const auto s = wrapped_sample(WrappedModelKind::WRXG, Rate(1.0), 20, 1);
    FitConfig bad;
    bad.lower = 2.0;
    bad.upper = 1.0;
    EXPECT_THROW((void)fit_mle(WrappedModelKind::WRXG, s, bad), DomainError);
    bad = {};
    bad.grid_points = 2;
    EXPECT_THROW((void)fit_mle(WrappedModelKind::WRXG, s, bad), DomainError);
}

TEST(Fit, SmallSampleHasNoCriteria) {
    const CircularSample s({0.5, 1.0}, AngleUnit::Radians, false);
    const auto fit = fit_mle(WrappedModelKind::WRXG, s);
    EXPECT_FALSE(fit.criteria.has_value());
}

TEST(FitProperties, SelfConsistencyWithinFourStandardErrors) {
    for (auto kind : kAllWrappedModels) {
        for (double l : {0.7, 2.5}) {
            int inside = 0;
            for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                const auto s = wrapped_sample(kind, Rate(l), 10'000, 1000 + seed);
                const auto fit = fit_mle(kind, s);
                if (std::abs(fit.lambda_hat.value() - l) <= 4.0 * fit.std_error) ++inside;
            }
            EXPECT_GE(inside, 95) << to_string(kind) << " lambda=" << l;
        }
    }
}

TEST(ModelDirection, KnownValues) {
    FitResult fit;
    fit.lambda_hat = Rate(1.32075);
    const auto d = model_mean_direction(fit);
    EXPECT_NEAR(d.mean_direction, 1.03693, 1e-4);
    EXPECT_NEAR(d.resultant_length, 0.55434, 1e-4);

    fit.lambda_hat = Rate(1.0);
    EXPECT_NEAR(model_mean_direction(fit).mean_direction, 1.24905, 5e-6);

    fit.lambda_hat = Rate(1e4);
    const auto lim = model_mean_direction(fit);
    EXPECT_LT(lim.mean_direction, 1e-3);
    EXPECT_GT(lim.resultant_length, 0.9999);

    fit.model = WrappedModelKind::WE;
    EXPECT_THROW((void)model_mean_direction(fit), DomainError);
}

class FisherB5 : public ::testing::Test {
protected:
    void SetUp() override {
        const auto path = test_support::fisher_b5_path();
        if (!path) GTEST_SKIP() << "Fisher B5 data file not available";
        sample_.emplace(ingest(*path, AngleUnit::Degrees, false));
    }
    std::optional<CircularSample> sample_;
};

TEST_F(FisherB5, LogLikelihoodAtPublishedRate) {
    EXPECT_NEAR(log_likelihood(WrappedModelKind::WRXG, Rate(1.32075), *sample_), -78.0285, 1e-3);
}

TEST_F(FisherB5, PublishedEstimates) {
    const auto wrxg = fit_mle(WrappedModelKind::WRXG, *sample_);
    EXPECT_NEAR(wrxg.lambda_hat.value(), 1.32075, 1e-3);
    EXPECT_NEAR(wrxg.std_error, 0.13005, 1e-3);
    const auto we = fit_mle(WrappedModelKind::WE, *sample_);
    EXPECT_NEAR(we.lambda_hat.value(), 0.66400, 1e-3);
    EXPECT_NEAR(we.std_error, 0.10081, 1e-3);
}

}  // namespace
