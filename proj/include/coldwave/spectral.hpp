#ifndef COLDWAVE_SPECTRAL_HPP
#define COLDWAVE_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "coldwave/errors.hpp"

namespace coldwave {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Uniform periodic grid on [-length/2, length/2) with integer-scaled
/// wavenumbers k_j = 2 pi j / length, j = -n/2+1 .. n/2.
class PeriodicGrid {
  public:
    explicit PeriodicGrid(int n_points, double length = two_pi);

    int n() const { return n_; }
    double length() const { return length_; }
    double dx() const { return length_ / n_; }
    double x(int i) const { return -0.5 * length_ + length_ * i / n_; }
    double wavenumber(int j) const { return two_pi * j / length_; }

    /// Largest retained mode under the 2/3 rule: |j| <= n/3.
    int dealias_cut() const { return n_ / 3; }

    std::vector<double> sample_points() const;

    bool operator==(const PeriodicGrid& o) const {
        return n_ == o.n_ && length_ == o.length_;
    }

  private:
    int n_;
    double length_;
};

/// One real scalar field with both physical samples and spectral
/// coefficients held coherently.  Immutable after construction; the
/// spectrum stores modes 0..n/2 (negative modes are conjugates).
class Field {
  public:
    Field(PeriodicGrid grid, std::vector<double> samples);
    Field(PeriodicGrid grid, std::vector<std::complex<double>> spectrum);

    static Field zero(const PeriodicGrid& grid);
    /// Samples fn(x_i) on the grid.
    template <class Fn>
    static Field sample(const PeriodicGrid& grid, Fn&& fn) {
        std::vector<double> s(grid.n());
        for (int i = 0; i < grid.n(); ++i) s[i] = fn(grid.x(i));
        return Field(grid, std::move(s));
    }

    const PeriodicGrid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }

    /// Coefficient of exp(i k_j x) in the trigonometric interpolant, any
    /// j in [-n/2, n/2].
    std::complex<double> coeff(int j) const;

    bool is_finite() const;
    double max_abs() const;
    double min_sample() const;
    double max_sample() const;

  private:
    PeriodicGrid grid_;
    std::vector<double> samples_;
    std::vector<std::complex<double>> spectrum_;
};

enum class MultiplierKind { L, N_op, Q, SqrtL, SqrtQ, Dx, Dxx };

/// Symbol m(xi) of the multiplier:  L -> xi^2/(1+xi^2),  N_op -> i xi/(1+xi^2),
/// Q -> 1/(1+xi^2),  SqrtL -> |xi|/sqrt(1+xi^2),  SqrtQ -> 1/sqrt(1+xi^2),
/// Dx -> i xi,  Dxx -> -xi^2.
std::complex<double> symbol_eval(MultiplierKind kind, double xi);

/// Multiplies each spectral coefficient by the symbol at its wavenumber.
/// Odd symbols (Dx, N_op) zero the Nyquist mode so the output stays real.
Field apply_multiplier(MultiplierKind kind, const Field& f);

/// 2/3-rule projection: zeroes coefficients with |j| > n/3.
Field dealias(const Field& f);

/// Exact quadrature of the trigonometric interpolant: length * c_0.
double integrate(const Field& f);

enum class CommutatorForm { raw, conservation };

/// [L, Nh]h, either as L(h Nh) - (Nh)(Lh) or as L(h Nh) + 1/2 dx (Nh)^2;
/// the two agree on band-limited input.  Products are dealiased.
Field commutator_L_Nh(const Field& h, CommutatorForm form);

/// Pointwise product followed by dealiasing.
Field multiply_dealiased(const Field& a, const Field& b);

/// g(x) = f(x - dist), exact phase rotation of the coefficients.
Field translate(const Field& f, double dist);

/// Subtracts the mean (zeroes mode 0).
Field project_mean_zero(const Field& f);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& f);
Field operator-(const Field& f);

/// a + c*b, the only combination the time stepper needs.
Field axpy(const Field& a, double c, const Field& b);

}  // namespace coldwave

#endif
