#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "traysight/error.hpp"
#include "traysight/evaluation.hpp"

namespace traysight {
namespace {

TEST(Tally, Examples) {
    EXPECT_EQ(tally({true, false}, {true, false}), (ConfusionMatrix{1, 0, 0, 1}));
    EXPECT_EQ(tally({true}, {false}), (ConfusionMatrix{0, 0, 1, 0}));
    EXPECT_EQ(tally({false}, {true}), (ConfusionMatrix{0, 1, 0, 0}));
}

TEST(Tally, Errors) {
    try {
        tally({true}, {true, false});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
    try {
        tally({}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
}

TEST(Tally, MatchesFourWayCountOracleAndNegationSwaps) {
    std::mt19937_64 rng(1000);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<bool> p(1000), a(1000), np(1000), na(1000);
        for (std::size_t i = 0; i < 1000; ++i) {
            p[i] = coin(rng);
            a[i] = coin(rng);
            np[i] = !p[i];
            na[i] = !a[i];
        }
        const auto cm = tally(p, a);
        EXPECT_EQ(cm, oracle::count_four_ways(p, a));
        EXPECT_EQ(cm.total(), 1000u);
        const auto neg = tally(np, na);
        EXPECT_EQ(neg, (ConfusionMatrix{cm.tn, cm.fp, cm.fn, cm.tp}));
    }
}

TEST(Tally, MergeByAddition) {
    const std::vector<bool> p{true, false, true, true, false, false};
    const std::vector<bool> a{true, true, false, true, false, true};
    const auto whole = tally(p, a);
    const auto left = tally({p.begin(), p.begin() + 2}, {a.begin(), a.begin() + 2});
    const auto right = tally({p.begin() + 2, p.end()}, {a.begin() + 2, a.end()});
    EXPECT_EQ(left + right, whole);
}

TEST(Metrics, ReproducesPublishedTable) {
    const auto m = metrics({4334, 2, 13, 13641});
    EXPECT_EQ(format_metric(m.accuracy), "0.9992");
    EXPECT_EQ(format_metric(m.precision), "0.9970");
    EXPECT_EQ(format_metric(m.recall), "0.9995");
    // Full-precision values, reference computed by hand: 17975/17990, 4334/4347, 4334/4336.
    EXPECT_DOUBLE_EQ(m.accuracy, 17975.0 / 17990.0);
    EXPECT_DOUBLE_EQ(*m.precision, 4334.0 / 4347.0);
    EXPECT_DOUBLE_EQ(*m.recall, 4334.0 / 4336.0);
}

TEST(Metrics, PerfectSinglePositive) {
    const auto m = metrics({1, 0, 0, 0});
    EXPECT_EQ(m.accuracy, 1.0);
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 1.0);
}

TEST(Metrics, UndefinedDenominators) {
    const auto m = metrics({0, 0, 0, 5});
    EXPECT_EQ(m.accuracy, 1.0);
    EXPECT_FALSE(m.precision.has_value());
    EXPECT_FALSE(m.recall.has_value());
    EXPECT_EQ(format_metric(m.precision), "undefined");
    EXPECT_THROW(metrics({}), Error);
}

TEST(Metrics, BoundedAndAccuracyOneIffNoErrors) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> d(0, 20);
    for (int i = 0; i < 2000; ++i) {
        const ConfusionMatrix cm{d(rng), d(rng), d(rng), d(rng)};
        if (cm.total() == 0) continue;
        const auto m = metrics(cm);
        EXPECT_GE(m.accuracy, 0.0);
        EXPECT_LE(m.accuracy, 1.0);
        if (m.precision) EXPECT_TRUE(*m.precision >= 0.0 && *m.precision <= 1.0);
        if (m.recall) EXPECT_TRUE(*m.recall >= 0.0 && *m.recall <= 1.0);
        EXPECT_EQ(m.accuracy == 1.0, cm.fp == 0 && cm.fn == 0);
    }
}

TEST(Labels, ParseAndJoin) {
    const auto truth = parse_labels("a 1\nb 0\r\n\nc 1\n");
    ASSERT_EQ(truth.size(), 3u);
    EXPECT_EQ(truth[1].id, "b");
    EXPECT_FALSE(truth[1].label);
    const auto pred = parse_labels("c 0\na 1\nb 0\n");
    const auto [p, a] = join_labels(pred, truth);
    EXPECT_EQ(p, (std::vector<bool>{true, false, false}));
    EXPECT_EQ(a, (std::vector<bool>{true, false, true}));
    EXPECT_EQ(parse_labels(format_labels(truth)).size(), 3u);
}

TEST(Labels, Errors) {
    auto code = [](const std::function<void()>& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    EXPECT_EQ(code([] { parse_labels("a 2\n"); }), ErrorCode::MalformedLine);
    EXPECT_EQ(code([] { parse_labels("a\n"); }), ErrorCode::MalformedLine);
    EXPECT_EQ(code([] { parse_labels("a 1\na 0\n"); }), ErrorCode::DuplicateKey);
    EXPECT_EQ(code([] { join_labels(parse_labels("a 1\n"), parse_labels("b 1\n")); }), ErrorCode::UnmatchedId);
    EXPECT_EQ(code([] { join_labels(parse_labels("a 1\nb 1\n"), parse_labels("a 1\n")); }), ErrorCode::UnmatchedId);
}

}  // namespace
}  // namespace traysight
