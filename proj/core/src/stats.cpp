#include "traysight/stats.hpp"

#include <cmath>

#include "traysight/error.hpp"

namespace traysight {

SampleSet::SampleSet(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorCode::EmptyInput, "sample set needs at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v) || v < 0.0 || v > 255.0) {
            throw Error(ErrorCode::InvalidValue,
                        "sample " + std::to_string(i) + " = " + std::to_string(v) + " outside [0, 255]");
        }
    }
}

double mean_intensity(const Histogram256& h) {
    std::uint64_t count = 0;
    std::uint64_t weighted = 0;
    for (std::size_t v = 0; v < h.bins.size(); ++v) {
        count += h.bins[v];
        weighted += v * h.bins[v];
    }
    if (count == 0) throw Error(ErrorCode::EmptyInput, "histogram has no pixels");
    return static_cast<double>(weighted) / static_cast<double>(count);
}

double sample_mean(std::span<const double> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "mean of zero samples");
    // Neumaier compensated sum.
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    return (sum + comp) / static_cast<double>(values.size());
}

double sample_mean(const SampleSet& s) { return sample_mean(s.values()); }

double sample_std(std::span<const double> values) {
    if (values.size() < 2) {
        throw Error(ErrorCode::InsufficientSamples,
                    "standard deviation needs n >= 2, got " + std::to_string(values.size()));
    }
    // Welford's single-pass update.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double v : values) {
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
    }
    return std::sqrt(m2 / static_cast<double>(values.size() - 1));
}

double sample_std(const SampleSet& s) { return sample_std(s.values()); }

double ci_halfwidth(double std_dev, std::size_t n, double z) {
    if (!std::isfinite(std_dev) || std_dev < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "std must be finite and >= 0");
    }
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    if (!std::isfinite(z) || z <= 0.0) throw Error(ErrorCode::InvalidArgument, "z must be > 0");
    return z * std_dev / std::sqrt(static_cast<double>(n));
}

}  // namespace traysight
