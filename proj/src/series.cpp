#include "seaidx/series.hpp"

#include <string>

namespace seaidx {

Dataset::Dataset(std::size_t n, std::size_t m, std::vector<float> values, bool znormalized)
    : n_(n), m_(m), values_(std::move(values)), znormalized_(znormalized) {
    if (values_.size() != n_ * m_) {
        throw Error(ErrorCode::kSizeMismatch, "value count " + std::to_string(values_.size()) +
                                                  " != n*m = " + std::to_string(n_ * m_));
    }
}

Dataset Dataset::from_series(const std::vector<DataSeries>& series, bool znormalized) {
    if (series.empty()) return Dataset(0, 0, {}, znormalized);
    const std::size_t m = series.front().size();
    std::vector<float> values;
    values.reserve(series.size() * m);
    for (const auto& s : series) {
        if (s.size() != m) throw Error(ErrorCode::kLengthMismatch, "ragged series in dataset");
        for (double v : s) values.push_back(static_cast<float>(v));
    }
    return Dataset(series.size(), m, std::move(values), znormalized);
}

Dataset Dataset::subset(std::span<const std::size_t> ids) const {
    std::vector<float> values;
    values.reserve(ids.size() * m_);
    for (std::size_t id : ids) {
        if (id >= n_) throw Error(ErrorCode::kInvalidArgument, "subset id out of range");
        auto r = row(id);
        values.insert(values.end(), r.begin(), r.end());
    }
    return Dataset(ids.size(), m_, std::move(values), znormalized_);
}

namespace {

template <typename T>
DataSeries znormalize_impl(std::span<const T> series) {
    if (series.size() < 2) {
        throw Error(ErrorCode::kInvalidArgument, "z-normalization needs at least 2 points");
    }
    const Moments mo = moments(series);
    if (mo.stddev < kConstantSeriesThreshold) {
        throw Error(ErrorCode::kConstantSeries, "population stddev " + std::to_string(mo.stddev));
    }
    DataSeries out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out[i] = (static_cast<double>(series[i]) - mo.mean) / mo.stddev;
    }
    return out;
}

}  // namespace

DataSeries znormalize(std::span<const double> series) { return znormalize_impl(series); }
DataSeries znormalize(std::span<const float> series) { return znormalize_impl(series); }

Dataset znormalize(const Dataset& dataset) {
    std::vector<float> values;
    values.reserve(dataset.size() * dataset.length());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        DataSeries z;
        try {
            z = znormalize(dataset.row(i));
        } catch (const Error& e) {
            throw Error(e.code(), "series " + std::to_string(i) + " (" + e.what() + ")");
        }
        for (double v : z) values.push_back(static_cast<float>(v));
    }
    return Dataset(dataset.size(), dataset.length(), std::move(values), true);
}

}  // namespace seaidx
