#ifndef COLDWAVE_FFT_HPP
#define COLDWAVE_FFT_HPP

#include <complex>
#include <vector>

namespace coldwave::fft {

// Real-to-half-complex transform, normalized so that out[j] is the DFT
// coefficient c_j with f_i = sum_j c_j exp(2 pi i i j / n).  out has n/2+1
// entries (modes 0..n/2); negative modes are the conjugates.
std::vector<std::complex<double>> forward(const std::vector<double>& samples);

// Inverse of forward(); spectrum must have n/2+1 entries.
std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum, int n);

}  // namespace coldwave::fft

#endif
