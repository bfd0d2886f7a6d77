#include "seaidx/datagen.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <string>

namespace seaidx {

GenSpec parse_gen_kind(std::string_view kind) {
    GenSpec spec;
    if (kind == "randwalk") {
        spec.kind = GenKind::kRandWalk;
    } else if (kind == "f5" || kind == "f10") {
        spec.kind = GenKind::kFSeries;
        spec.amplified = kind == "f5" ? 5 : 10;
    } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(kind) + "'");
    }
    return spec;
}

DataSeries randwalk_raw(std::uint64_t seed, StreamDomain domain, std::size_t index, std::size_t m) {
    CounterRng rng(seed, stream_id(domain, index));
    DataSeries x(m);
    double acc = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        acc += rng.gaussian();
        x[t] = acc;
    }
    return x;
}

namespace {

struct FftwDeleter {
    void operator()(void* p) const { fftw_free(p); }
};
struct PlanDeleter {
    void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

// Planner calls are not thread-safe in FFTW.
std::mutex& planner_mutex() {
    static std::mutex mu;
    return mu;
}

class RealIdft {
public:
    explicit RealIdft(std::size_t m)
        : m_(m),
          spectrum_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (m / 2 + 1)))),
          out_(static_cast<double*>(fftw_malloc(sizeof(double) * m))) {
        std::lock_guard lock(planner_mutex());
        plan_.reset(fftw_plan_dft_c2r_1d(static_cast<int>(m), spectrum_.get(), out_.get(), FFTW_ESTIMATE));
        if (!plan_) throw Error(ErrorCode::kInvalidArgument, "FFTW planning failed");
    }

    fftw_complex* spectrum() { return spectrum_.get(); }

    DataSeries run() {
        fftw_execute(plan_.get());
        return DataSeries(out_.get(), out_.get() + m_);
    }

private:
    std::size_t m_;
    std::unique_ptr<fftw_complex, FftwDeleter> spectrum_;
    std::unique_ptr<double, FftwDeleter> out_;
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan_;
};

void check_fspec(std::size_t m, std::size_t amplified) {
    if (m < 4) throw Error(ErrorCode::kInvalidArgument, "F-series need m >= 4");
    if (2 * amplified >= m) throw Error(ErrorCode::kInvalidArgument, "amplified components must be < m/2");
}

DataSeries fseries_with(RealIdft& idft, std::uint64_t seed, StreamDomain domain, std::size_t index,
                        std::size_t m, std::size_t amplified, double amp) {
    CounterRng rng(seed, stream_id(domain, index));
    fftw_complex* spec = idft.spectrum();
    spec[0][0] = 0.0;
    spec[0][1] = 0.0;
    for (std::size_t k = 1; k <= m / 2; ++k) {
        const double gain = k <= amplified ? amp : 1.0;
        spec[k][0] = gain * rng.gaussian();
        // The Nyquist bin of an even-length real series is real.
        spec[k][1] = (2 * k == m) ? 0.0 : gain * rng.gaussian();
    }
    return idft.run();
}

Dataset normalize_rows(std::vector<DataSeries> rows) {
    for (auto& r : rows) r = znormalize(std::span<const double>(r));
    return Dataset::from_series(rows, true);
}

template <typename Make>
Dataset build_rows(std::size_t n, Make&& make) {
    std::vector<DataSeries> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = make(i);
    return normalize_rows(std::move(rows));
}

Dataset generate_in(const GenSpec& spec, StreamDomain domain, std::size_t count) {
    if (spec.m < 2) throw Error(ErrorCode::kInvalidArgument, "series length must be at least 2");
    if (spec.kind == GenKind::kRandWalk) {
        return build_rows(count, [&](std::size_t i) { return randwalk_raw(spec.seed, domain, i, spec.m); });
    }
    check_fspec(spec.m, spec.amplified);
    RealIdft idft(spec.m);
    return build_rows(count, [&](std::size_t i) {
        return fseries_with(idft, spec.seed, domain, i, spec.m, spec.amplified, spec.amp);
    });
}

}  // namespace

DataSeries fseries_raw(std::uint64_t seed, StreamDomain domain, std::size_t index, std::size_t m,
                       std::size_t amplified, double amp) {
    check_fspec(m, amplified);
    RealIdft idft(m);
    return fseries_with(idft, seed, domain, index, m, amplified, amp);
}

Dataset gen_randwalk(std::size_t n, std::size_t m, std::uint64_t seed) {
    return generate({GenKind::kRandWalk, n, m, 0, 1.0, seed});
}

Dataset gen_fseries(std::size_t n, std::size_t m, std::size_t amplified, double amp, std::uint64_t seed) {
    return generate({GenKind::kFSeries, n, m, amplified, amp, seed});
}

Dataset generate(const GenSpec& spec) {
    if (spec.n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
    return generate_in(spec, StreamDomain::kBase, spec.n);
}

Dataset gen_queries(const GenSpec& spec, std::size_t n_q) {
    if (n_q == 0) return Dataset(0, spec.m, {}, true);
    return generate_in(spec, StreamDomain::kQuery, n_q);
}

}  // namespace seaidx
