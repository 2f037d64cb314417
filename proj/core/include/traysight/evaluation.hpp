#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace traysight {

/// Un-normalized actual-vs-predicted tallies. Positive = module present
/// (presence task) or placement correct (placement task).
struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fn = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const noexcept { return tp + fn + fp + tn; }

    ConfusionMatrix& operator+=(const ConfusionMatrix& o) noexcept {
        tp += o.tp;
        fn += o.fn;
        fp += o.fp;
        tn += o.tn;
        return *this;
    }
    friend ConfusionMatrix operator+(ConfusionMatrix a, const ConfusionMatrix& b) noexcept {
        return a += b;
    }
    bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix tally(const std::vector<bool>& predicted, const std::vector<bool>& actual);

/// Precision and recall are empty when their denominator is zero.
struct Metrics {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
};

Metrics metrics(const ConfusionMatrix& cm);

/// Four-decimal rendering, or "undefined".
std::string format_metric(std::optional<double> value);

struct LabelRecord {
    std::string id;
    bool label = false;
};

/// Parses "<id> <0|1>" lines. Blank lines are skipped; duplicate ids are an error.
std::vector<LabelRecord> parse_labels(std::string_view text);
std::string format_labels(const std::vector<LabelRecord>& records);

/// Pairs predictions with truth by id, in truth order. Every id must appear
/// in both sets. Returns (predicted, actual).
std::pair<std::vector<bool>, std::vector<bool>> join_labels(const std::vector<LabelRecord>& predicted,
                                                            const std::vector<LabelRecord>& truth);

}  // namespace traysight
