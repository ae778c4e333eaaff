#include "sigmalab/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace sigmalab::spectral {

namespace {

// Planning is not thread-safe in FFTW; execution with the new-array
// interface is. Plans are created once per (n, N, sign) and kept for the
// process lifetime.
class PlanCache {
 public:
  fftw_plan get(int n, int N, int sign) {
    std::lock_guard lock(mu_);
    const auto key = std::make_tuple(n, N, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    int dims[3] = {N, N, N};
    std::size_t total = 1;
    for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(N);
    auto* a = fftw_alloc_complex(total);
    auto* b = fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_dft(n, dims, a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

// (-1)^{i_1+...+i_n}: moves the expansion point from -L to the origin.
void apply_phase(const SpectralGrid& g, std::complex<double>* data) {
  if (g.dim() == 1) {
    for (std::size_t f = 1; f < g.size(); f += 2) data[f] = -data[f];
    return;
  }
  for (std::size_t f = 0; f < g.size(); ++f) {
    const auto idx = g.unflatten(f);
    if ((idx[0] + idx[1] + idx[2]) & 1) data[f] = -data[f];
  }
}

void run(const SpectralGrid& g, int sign, const std::complex<double>* in,
         std::complex<double>* out) {
  fftw_plan plan = cache().get(g.dim(), g.points_per_axis(), sign);
  if (in == out) {  // plans are out-of-place
    std::vector<std::complex<double>> copy(in, in + g.size());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(copy.data()),
                     reinterpret_cast<fftw_complex*>(out));
    return;
  }
  // FFTW never writes its input for complex out-of-place transforms, but the
  // signature is non-const.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in));
  fftw_execute_dft(plan, src, reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward(const SpectralGrid& grid, const std::complex<double>* in, std::complex<double>* out) {
  run(grid, FFTW_FORWARD, in, out);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t f = 0; f < grid.size(); ++f) out[f] *= scale;
  apply_phase(grid, out);
}

void inverse(const SpectralGrid& grid, const std::complex<double>* in, std::complex<double>* out) {
  std::vector<std::complex<double>> tmp(in, in + grid.size());
  apply_phase(grid, tmp.data());
  run(grid, FFTW_BACKWARD, tmp.data(), out);
}

}  // namespace sigmalab::spectral
