#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "seaidx/error.hpp"

namespace seaidx {

/// Owned single series. Dataset rows are exposed as spans over float storage.
using DataSeries = std::vector<double>;

/// Population standard deviation below which a series is treated as constant.
inline constexpr double kConstantSeriesThreshold = 1e-12;

/// Dense n x m collection of equal-length series stored row-major as float32.
/// Immutable once built; rows are handed out as read-only spans.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::size_t n, std::size_t m, std::vector<float> values, bool znormalized = false);

    /// Builds a dataset from owned series; every series must have the same length.
    static Dataset from_series(const std::vector<DataSeries>& series, bool znormalized = false);

    std::size_t size() const noexcept { return n_; }
    std::size_t length() const noexcept { return m_; }
    bool empty() const noexcept { return n_ == 0; }
    bool znormalized() const noexcept { return znormalized_; }

    std::span<const float> row(std::size_t i) const {
        return {values_.data() + i * m_, m_};
    }
    std::span<const float> values() const noexcept { return values_; }

    /// Copies the selected rows into a new dataset, preserving their order.
    Dataset subset(std::span<const std::size_t> ids) const;

    bool operator==(const Dataset& other) const = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<float> values_;
    bool znormalized_ = false;
};

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

template <typename T>
Moments moments(std::span<const T> x) {
    double sum = 0.0;
    for (T v : x) sum += static_cast<double>(v);
    const double mean = sum / static_cast<double>(x.size());
    double ss = 0.0;
    for (T v : x) {
        const double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(x.size()))};
}

/// Shifts to mean 0 and scales to population stddev 1.
/// Throws ConstantSeries when the stddev is below kConstantSeriesThreshold.
DataSeries znormalize(std::span<const double> series);
DataSeries znormalize(std::span<const float> series);

/// Z-normalizes every row. Rows that are constant raise ConstantSeries with the row index.
Dataset znormalize(const Dataset& dataset);

template <typename A, typename B>
double squared_euclidean(std::span<const A> a, std::span<const B> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::kLengthMismatch, "series lengths differ");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += d * d;
    }
    return acc;
}

template <typename A, typename B>
double euclidean(std::span<const A> a, std::span<const B> b) {
    return std::sqrt(squared_euclidean(a, b));
}

inline double euclidean(const DataSeries& a, const DataSeries& b) {
    return euclidean(std::span<const double>(a), std::span<const double>(b));
}

}  // namespace seaidx
