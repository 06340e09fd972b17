#ifndef WHF_SRC_FFT_HPP
#define WHF_SRC_FFT_HPP

#include <vector>

#include "whf/ring.hpp"

namespace whf::detail {

// Unnormalized in-place DFT: X_k = sum_j x_j exp(-+2 pi i jk/N), the sign
// being negative for the forward transform.
void dft(std::vector<Complex>& data, bool inverse);

// Samples of a finitely supported series at the N-th roots of unity.
std::vector<Complex> sample_on_circle(const std::vector<std::pair<int, Complex>>& coeffs, int samples);

// Coefficients c_n, n in [-N/2, N/2), of the trigonometric polynomial
// interpolating the given unit-circle samples.
std::vector<std::pair<int, Complex>> coefficients_from_samples(std::vector<Complex> samples);

}  // namespace whf::detail

#endif  // WHF_SRC_FFT_HPP
