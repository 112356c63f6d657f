#include "coldwave/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "coldwave/fft.hpp"

namespace coldwave {

PeriodicGrid::PeriodicGrid(int n_points, double length) : n_(n_points), length_(length) {
    if (n_points < 8 || n_points % 2 != 0)
        throw std::invalid_argument("PeriodicGrid: n_points must be even and >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("PeriodicGrid: length must be positive");
}

std::vector<double> PeriodicGrid::sample_points() const {
    std::vector<double> xs(n_);
    for (int i = 0; i < n_; ++i) xs[i] = x(i);
    return xs;
}

Field::Field(PeriodicGrid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
    if (static_cast<int>(samples_.size()) != grid_.n())
        throw std::invalid_argument("Field: sample count does not match grid");
    spectrum_ = fft::forward(samples_);
}

Field::Field(PeriodicGrid grid, std::vector<std::complex<double>> spectrum)
    : grid_(grid), spectrum_(std::move(spectrum)) {
    if (static_cast<int>(spectrum_.size()) != grid_.n() / 2 + 1)
        throw std::invalid_argument("Field: spectrum size must be n/2+1");
    // A real field needs real mode-0 and Nyquist entries.
    spectrum_[0] = spectrum_[0].real();
    spectrum_.back() = spectrum_.back().real();
    samples_ = fft::inverse(spectrum_, grid_.n());
}

Field Field::zero(const PeriodicGrid& grid) {
    return Field(grid, std::vector<double>(grid.n(), 0.0));
}

std::complex<double> Field::coeff(int j) const {
    const int n = grid_.n();
    if (j < -n / 2 || j > n / 2) throw std::out_of_range("Field::coeff: mode out of range");
    // Grid samples start at -length/2, so the stored DFT coefficients carry
    // a phase (-1)^j relative to the exp(i k_j x) basis.
    std::complex<double> c = (j >= 0) ? spectrum_[j] : std::conj(spectrum_[-j]);
    return (j % 2 == 0) ? c : -c;
}

bool Field::is_finite() const {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](double v) { return std::isfinite(v); });
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

double Field::min_sample() const {
    return *std::min_element(samples_.begin(), samples_.end());
}

double Field::max_sample() const {
    return *std::max_element(samples_.begin(), samples_.end());
}

std::complex<double> symbol_eval(MultiplierKind kind, double xi) {
    const double d = 1.0 + xi * xi;
    switch (kind) {
        case MultiplierKind::L: return xi * xi / d;
        case MultiplierKind::N_op: return std::complex<double>(0.0, xi / d);
        case MultiplierKind::Q: return 1.0 / d;
        case MultiplierKind::SqrtL: return std::abs(xi) / std::sqrt(d);
        case MultiplierKind::SqrtQ: return 1.0 / std::sqrt(d);
        case MultiplierKind::Dx: return std::complex<double>(0.0, xi);
        case MultiplierKind::Dxx: return -xi * xi;
    }
    throw std::logic_error("symbol_eval: unknown kind");
}

namespace {

bool odd_symbol(MultiplierKind kind) {
    return kind == MultiplierKind::Dx || kind == MultiplierKind::N_op;
}

}  // namespace

Field apply_multiplier(MultiplierKind kind, const Field& f) {
    if (!f.is_finite()) throw NonFiniteField("apply_multiplier: non-finite samples");
    const PeriodicGrid& g = f.grid();
    std::vector<std::complex<double>> c = f.spectrum();
    for (int j = 0; j <= g.n() / 2; ++j) c[j] *= symbol_eval(kind, g.wavenumber(j));
    if (odd_symbol(kind)) c[g.n() / 2] = 0.0;
    return Field(g, std::move(c));
}

Field dealias(const Field& f) {
    const PeriodicGrid& g = f.grid();
    const int cut = g.dealias_cut();
    std::vector<std::complex<double>> c = f.spectrum();
    for (int j = cut + 1; j <= g.n() / 2; ++j) c[j] = 0.0;
    return Field(g, std::move(c));
}

double integrate(const Field& f) {
    return f.grid().length() * f.spectrum()[0].real();
}

Field multiply_dealiased(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("multiply: grid mismatch");
    std::vector<double> s(a.grid().n());
    for (int i = 0; i < a.grid().n(); ++i) s[i] = a.samples()[i] * b.samples()[i];
    return dealias(Field(a.grid(), std::move(s)));
}

Field commutator_L_Nh(const Field& h, CommutatorForm form) {
    if (!h.is_finite()) throw NonFiniteField("commutator_L_Nh: non-finite samples");
    const Field Nh = apply_multiplier(MultiplierKind::N_op, h);
    const Field lead = apply_multiplier(MultiplierKind::L, multiply_dealiased(h, Nh));
    if (form == CommutatorForm::raw) {
        const Field Lh = apply_multiplier(MultiplierKind::L, h);
        return lead - multiply_dealiased(Nh, Lh);
    }
    return lead + 0.5 * apply_multiplier(MultiplierKind::Dx, multiply_dealiased(Nh, Nh));
}

Field translate(const Field& f, double dist) {
    const PeriodicGrid& g = f.grid();
    std::vector<std::complex<double>> c = f.spectrum();
    for (int j = 0; j <= g.n() / 2; ++j) {
        const double ph = -g.wavenumber(j) * dist;
        c[j] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return Field(g, std::move(c));
}

Field project_mean_zero(const Field& f) {
    std::vector<std::complex<double>> c = f.spectrum();
    c[0] = 0.0;
    return Field(f.grid(), std::move(c));
}

Field operator+(const Field& a, const Field& b) { return axpy(a, 1.0, b); }
Field operator-(const Field& a, const Field& b) { return axpy(a, -1.0, b); }

Field operator*(double c, const Field& f) {
    std::vector<double> s(f.grid().n());
    for (int i = 0; i < f.grid().n(); ++i) s[i] = c * f.samples()[i];
    return Field(f.grid(), std::move(s));
}

Field operator-(const Field& f) { return -1.0 * f; }

Field axpy(const Field& a, double c, const Field& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("axpy: grid mismatch");
    std::vector<double> s(a.grid().n());
    for (int i = 0; i < a.grid().n(); ++i) s[i] = a.samples()[i] + c * b.samples()[i];
    return Field(a.grid(), std::move(s));
}

}  // namespace coldwave
