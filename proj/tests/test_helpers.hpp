#ifndef COLDWAVE_TEST_HELPERS_HPP
#define COLDWAVE_TEST_HELPERS_HPP

#include <cmath>
#include <random>

#include "coldwave/fft.hpp"
#include "coldwave/spectral.hpp"

namespace coldwave::testing {

/// Seeded random band-limited field: sum over modes 1..max_mode of
/// (a_k cos kx + b_k sin kx) / k^decay with a,b ~ U(-1,1).
inline Field random_band_limited(const PeriodicGrid& grid, unsigned seed, int max_mode,
                                 double decay = 2.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(max_mode + 1), b(max_mode + 1);
    for (int k = 1; k <= max_mode; ++k) {
        a[k] = u(rng) / std::pow(k, decay);
        b[k] = u(rng) / std::pow(k, decay);
    }
    return Field::sample(grid, [&](double x) {
        double v = 0.0;
        for (int k = 1; k <= max_mode; ++k) v += a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
        return v;
    });
}

/// Quadrature of Q f through the periodized kernel G(x) = 1/2 exp(-|x|),
/// independent of the multiplier symbol: f is evaluated on an oversampled
/// grid through its trigonometric interpolant and convolved with kernel
/// samples by the rectangle rule.
inline Field helmholtz_kernel_quadrature(const Field& f, int oversample = 128, int images = 30) {
    const PeriodicGrid& g = f.grid();
    const int n = g.n();
    const int m = n * oversample;
    const double L = g.length();

    std::vector<std::complex<double>> cf(m / 2 + 1, 0.0);
    for (int j = 0; j <= n / 2; ++j) cf[j] = f.spectrum()[j];
    const std::vector<double> fine = fft::inverse(cf, m);

    std::vector<double> kernel(m);
    for (int i = 0; i < m; ++i) {
        const double s = L * i / m;
        double v = 0.0;
        for (int im = -images; im <= images; ++im) v += 0.5 * std::exp(-std::abs(s + im * L));
        kernel[i] = v;
    }

    auto ck = fft::forward(kernel);
    auto cfine = fft::forward(fine);
    std::vector<std::complex<double>> conv(m / 2 + 1);
    for (int j = 0; j <= m / 2; ++j) conv[j] = static_cast<double>(m) * cfine[j] * ck[j];
    std::vector<double> full = fft::inverse(conv, m);

    std::vector<double> coarse(n);
    for (int i = 0; i < n; ++i) coarse[i] = full[i * oversample] * (L / m);
    return Field(g, std::move(coarse));
}

inline double sup_diff(const Field& a, const Field& b) { return (a - b).max_abs(); }

}  // namespace coldwave::testing

#endif
