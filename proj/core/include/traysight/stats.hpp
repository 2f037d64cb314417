#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "traysight/imaging.hpp"

namespace traysight {

/// Ordered mean-intensity samples x1..xn; n >= 1, each value finite in [0, 255].
class SampleSet {
public:
    explicit SampleSet(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// Intensity-weighted mean of the histogram: sum(v * bins[v]) / sum(bins).
/// Throws EmptyInput when every bin is zero.
double mean_intensity(const Histogram256& h);

/// Arithmetic mean. Throws EmptyInput on an empty range.
double sample_mean(std::span<const double> values);
double sample_mean(const SampleSet& s);

/// Bessel-corrected (n - 1) standard deviation.
/// Throws InsufficientSamples when fewer than two values are given.
double sample_std(std::span<const double> values);
double sample_std(const SampleSet& s);

/// Half-width z * std / sqrt(n) of the confidence interval for the mean.
double ci_halfwidth(double std_dev, std::size_t n, double z);

}  // namespace traysight
