#include "coldwave/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace coldwave::fft {
namespace {

// FFTW's planner is not thread safe and c2r destroys its input, so every
// transform runs on per-size scratch buffers under one lock.  Sizes here are
// small (n <= a few thousand), serializing is not a bottleneck.
struct PlanSet {
    explicit PlanSet(int n)
        : real(fftw_alloc_real(n)),
          cplx(fftw_alloc_complex(n / 2 + 1)),
          r2c(fftw_plan_dft_r2c_1d(n, real, cplx, FFTW_ESTIMATE)),
          c2r(fftw_plan_dft_c2r_1d(n, cplx, real, FFTW_ESTIMATE)) {}
    ~PlanSet() {
        fftw_destroy_plan(c2r);
        fftw_destroy_plan(r2c);
        fftw_free(cplx);
        fftw_free(real);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;

    double* real;
    fftw_complex* cplx;
    fftw_plan r2c;
    fftw_plan c2r;
};

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

PlanSet& plans_for(int n) {
    static std::map<int, std::unique_ptr<PlanSet>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlanSet>(n);
    return *slot;
}

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("fft: n must be even and >= 2");
    std::lock_guard<std::mutex> lock(planner_mutex());
    PlanSet& p = plans_for(n);
    std::memcpy(p.real, samples.data(), n * sizeof(double));
    fftw_execute(p.r2c);
    std::vector<std::complex<double>> out(n / 2 + 1);
    const double inv = 1.0 / n;
    for (int j = 0; j <= n / 2; ++j)
        out[j] = std::complex<double>(p.cplx[j][0] * inv, p.cplx[j][1] * inv);
    return out;
}

std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum, int n) {
    if (static_cast<int>(spectrum.size()) != n / 2 + 1)
        throw std::invalid_argument("fft: spectrum size must be n/2+1");
    std::lock_guard<std::mutex> lock(planner_mutex());
    PlanSet& p = plans_for(n);
    for (int j = 0; j <= n / 2; ++j) {
        p.cplx[j][0] = spectrum[j].real();
        p.cplx[j][1] = spectrum[j].imag();
    }
    fftw_execute(p.c2r);
    return std::vector<double>(p.real, p.real + n);
}

}  // namespace coldwave::fft
