#include "fft.hpp"

#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace whf::detail {

namespace {
// FFTW's planner is not re-entrant.
std::mutex planner_mutex;
}  // namespace

void dft(std::vector<Complex>& data, bool inverse) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex);
  fftw_destroy_plan(plan);
}

std::vector<Complex> sample_on_circle(const std::vector<std::pair<int, Complex>>& coeffs, int samples) {
  // a(zeta_k) = sum_n c_n zeta_k^n is an inverse DFT of the folded coefficients.
  std::vector<Complex> data(static_cast<std::size_t>(samples), Complex(0.0, 0.0));
  for (const auto& [n, c] : coeffs) {
    const int idx = ((n % samples) + samples) % samples;
    data[static_cast<std::size_t>(idx)] += c;
  }
  dft(data, true);
  return data;
}

std::vector<std::pair<int, Complex>> coefficients_from_samples(std::vector<Complex> samples) {
  const int m = static_cast<int>(samples.size());
  dft(samples, false);
  std::vector<std::pair<int, Complex>> out;
  out.reserve(samples.size());
  for (int n = -m / 2; n < m / 2; ++n) {
    const int idx = ((n % m) + m) % m;
    out.emplace_back(n, samples[static_cast<std::size_t>(idx)] / static_cast<double>(m));
  }
  return out;
}

}  // namespace whf::detail
