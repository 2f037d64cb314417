#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "traysight/error.hpp"
#include "traysight/stats.hpp"

namespace traysight {
namespace {

std::vector<double> uniform_values(std::size_t n, std::mt19937_64& rng, double lo = 0.0, double hi = 255.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

TEST(MeanIntensity, SingleBinAndSymmetry) {
    Histogram256 h;
    h.bins[100] = 50;
    EXPECT_DOUBLE_EQ(mean_intensity(h), 100.0);

    Histogram256 h2;
    h2.bins[0] = 1;
    h2.bins[255] = 1;
    EXPECT_DOUBLE_EQ(mean_intensity(h2), 127.5);
}

TEST(MeanIntensity, EmptyHistogramIsAnError) {
    try {
        mean_intensity(Histogram256{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
}

TEST(MeanIntensity, MatchesExpansionOracle) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> count(0, 40);
    for (int trial = 0; trial < 100; ++trial) {
        Histogram256 h;
        for (auto& b : h.bins) b = static_cast<std::uint64_t>(count(rng));
        EXPECT_NEAR(mean_intensity(h), oracle::expanded_mean(h), 1e-9);
    }
}

TEST(MeanIntensity, EqualsPixelMeanOfImage) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto img = oracle::random_image(13, 29, rng);
        EXPECT_NEAR(mean_intensity(histogram(img)), oracle::rect_pixel_mean(img, {0, 0, 13, 29}), 1e-9);
    }
}

TEST(SampleSet, ValidatesDomain) {
    EXPECT_THROW(SampleSet({}), Error);
    EXPECT_THROW(SampleSet({1.0, 256.0}), Error);
    EXPECT_THROW(SampleSet({-0.5}), Error);
    EXPECT_THROW(SampleSet({std::nan("")}), Error);
    EXPECT_EQ(SampleSet({0.0, 255.0}).size(), 2u);
}

TEST(SampleMean, Examples) {
    EXPECT_DOUBLE_EQ(sample_mean(SampleSet({5.0})), 5.0);
    EXPECT_DOUBLE_EQ(sample_mean(SampleSet({1, 2, 3, 4})), 2.5);
    try {
        sample_mean(std::span<const double>{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
}

TEST(SampleMean, MatchesSummationOracle) {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 50; ++trial) {
        const auto v = uniform_values(30, rng);
        EXPECT_NEAR(sample_mean(SampleSet(v)), oracle::naive_mean(v), 1e-9);
    }
}

TEST(SampleStd, Examples) {
    EXPECT_EQ(sample_std(SampleSet({3, 3, 3})), 0.0);
    EXPECT_NEAR(sample_std(SampleSet({1, 3})), 1.4142135623730951, 1e-15);
    for (std::size_t n : {0u, 1u}) {
        try {
            sample_std(std::vector<double>(n, 1.0));
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InsufficientSamples);
        }
    }
}

TEST(SampleStd, MatchesTwoPassOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto v = uniform_values(30, rng);
        EXPECT_NEAR(sample_std(SampleSet(v)), oracle::two_pass_std(v), 1e-9);
    }
}

TEST(SampleStd, ShiftAndScaleProperties) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> shift(-50.0, 50.0), scale(0.0, 1.5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = uniform_values(2 + trial % 60, rng, 60.0, 160.0);
        const double c = shift(rng), k = scale(rng);
        std::vector<double> shifted(v), scaled(v);
        for (auto& x : shifted) x += c;
        for (auto& x : scaled) x *= k;
        EXPECT_NEAR(sample_mean(shifted), sample_mean(v) + c, 1e-9);
        EXPECT_NEAR(sample_std(shifted), sample_std(v), 1e-9);
        EXPECT_NEAR(sample_std(scaled), k * sample_std(v), 1e-9);
    }
}

TEST(SampleStd, ZeroOnlyForConstantSets) {
    EXPECT_GT(sample_std(std::vector<double>{118.0, 118.0, 118.0000001}), 0.0);
    EXPECT_EQ(sample_std(std::vector<double>(50, 17.25)), 0.0);
}

TEST(CiHalfwidth, Examples) {
    EXPECT_DOUBLE_EQ(ci_halfwidth(2.0, 4, 1.96), 1.96);
    EXPECT_EQ(ci_halfwidth(0.0, 7, 2.5), 0.0);
    // 1.96 * 2.315 / sqrt(30), evaluated independently
    EXPECT_NEAR(ci_halfwidth(2.315, 30, 1.96), 0.8284121108079802, 1e-12);
}

TEST(CiHalfwidth, MonotoneInNLinearInStdAndZ) {
    double prev = ci_halfwidth(3.0, 1, 1.96);
    for (std::size_t n = 2; n < 300; ++n) {
        const double cur = ci_halfwidth(3.0, n, 1.96);
        EXPECT_LT(cur, prev);
        prev = cur;
    }
    EXPECT_NEAR(ci_halfwidth(6.0, 10, 1.96), 2.0 * ci_halfwidth(3.0, 10, 1.96), 1e-12);
    EXPECT_NEAR(ci_halfwidth(3.0, 10, 3.92), 2.0 * ci_halfwidth(3.0, 10, 1.96), 1e-12);
}

TEST(CiHalfwidth, RejectsBadPreconditions) {
    EXPECT_THROW(ci_halfwidth(-1.0, 3, 1.96), Error);
    EXPECT_THROW(ci_halfwidth(1.0, 0, 1.96), Error);
    EXPECT_THROW(ci_halfwidth(1.0, 3, 0.0), Error);
}

}  // namespace
}  // namespace traysight
