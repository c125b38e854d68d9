#include "qkr/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace qkr {

namespace {

// FFTW planning mutates global state; execution does not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SpectralWorkspace::SpectralWorkspace(int n_points)
    : n_(n_points), bins_(nullptr), plan_forward_(nullptr),
      plan_backward_(nullptr), kick_key_(-1.0) {
  if (n_points < 2) throw DomainError("workspace size must be >= 2");
  bins_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n_points));
  auto* raw = reinterpret_cast<fftw_complex*>(bins_);
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_ESTIMATE keeps plan selection deterministic across runs.
  plan_forward_ = fftw_plan_dft_1d(n_points, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_backward_ = fftw_plan_dft_1d(n_points, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
}

SpectralWorkspace::~SpectralWorkspace() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_forward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  if (plan_backward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
  if (bins_) fftw_free(bins_);
}

void SpectralWorkspace::run_forward() {
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
}

void SpectralWorkspace::run_backward() {
  fftw_execute(static_cast<fftw_plan>(plan_backward_));
}

const std::vector<std::complex<double>>& SpectralWorkspace::kick_phase_table(
    double alpha_over_hbar) {
  if (kick_table_.empty() || kick_key_ != alpha_over_hbar) {
    kick_key_ = alpha_over_hbar;
    kick_table_.resize(n_);
    const double dx = two_pi / n_;
    for (int l = 0; l < n_; ++l)
      kick_table_[l] = std::polar(1.0, alpha_over_hbar * std::cos(l * dx));
  }
  return kick_table_;
}

std::int64_t bin_label(int r, std::int64_t k_offset, int n_points) {
  std::int64_t m = (r - k_offset) % n_points;
  if (m < 0) m += n_points;
  return k_offset + m;
}

int label_bin(std::int64_t k, int n_points) {
  std::int64_t r = k % n_points;
  if (r < 0) r += n_points;
  return static_cast<int>(r);
}

MomentumAmplitudes forward_transform(const QuantumState& state,
                                     SpectralWorkspace& ws) {
  const int n = state.grid.n_points;
  if (ws.size() != n) throw DomainError("workspace size does not match grid");
  std::memcpy(ws.bins(), state.amplitudes.data(),
              sizeof(std::complex<double>) * n);
  ws.run_forward();
  // A_k = dx/sqrt(2 pi) * bin(k mod N); with dx = 2 pi / N this is
  // sqrt(2 pi)/N per raw bin.
  const double scale = std::sqrt(two_pi) / n;
  MomentumAmplitudes out;
  out.k_offset = state.k_offset;
  out.amps.resize(n);
  for (int j = 0; j < n; ++j) {
    const int r = label_bin(out.k_offset + j, n);
    out.amps[j] = ws.bins()[r] * scale;
  }
  return out;
}

QuantumState inverse_transform(const MomentumAmplitudes& amps, const Grid& grid,
                               SpectralWorkspace& ws) {
  const int n = grid.n_points;
  if (ws.size() != n || static_cast<int>(amps.amps.size()) != n)
    throw DomainError("workspace/amplitude size does not match grid");
  for (int j = 0; j < n; ++j) {
    const int r = label_bin(amps.k_offset + j, n);
    ws.bins()[r] = amps.amps[j];
  }
  ws.run_backward();
  const double scale = 1.0 / std::sqrt(two_pi);
  QuantumState out;
  out.grid = grid;
  out.k_offset = amps.k_offset;
  out.amplitudes.resize(n);
  for (int l = 0; l < n; ++l) out.amplitudes[l] = ws.bins()[l] * scale;
  return out;
}

}  // namespace qkr
