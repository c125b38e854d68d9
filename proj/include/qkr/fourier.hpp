#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qkr/core.hpp"

namespace qkr {

/// Momentum-side amplitudes over one window of N consecutive integer labels:
/// amps[j] = A_{k_offset + j}. Under the convention used throughout,
/// sum_k |A_k|^2 = sum_l |psi_l|^2 dx.
struct MomentumAmplitudes {
  std::vector<std::complex<double>> amps;
  std::int64_t k_offset = 0;

  std::int64_t label(int j) const { return k_offset + j; }
};

/// FFT plans and scratch for one grid size. Create one per simulation run;
/// plan creation is serialized internally, execution is not shared.
///
/// The raw transforms act on DFT bins: bin r collects every momentum label
/// congruent to r (mod N). A window [k_offset, k_offset+N) picks exactly one
/// representative per bin, so re-centering the window is pure relabeling and
/// never touches amplitudes.
class SpectralWorkspace {
 public:
  explicit SpectralWorkspace(int n_points);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  int size() const { return n_; }
  std::complex<double>* bins() { return bins_; }

  /// bins[r] <- sum_l bins[l] exp(-2 pi i r l / N)  (unnormalized)
  void run_forward();
  /// bins[l] <- sum_r bins[r] exp(+2 pi i r l / N)  (unnormalized)
  void run_backward();

  /// Pointwise kick factor exp(i (alpha/hbar) cos(l dx)), cached per run.
  const std::vector<std::complex<double>>& kick_phase_table(double alpha_over_hbar);

 private:
  int n_;
  std::complex<double>* bins_;
  void* plan_forward_;
  void* plan_backward_;
  double kick_key_;
  std::vector<std::complex<double>> kick_table_;
};

/// Absolute momentum label of DFT bin r within the window based at k_offset.
std::int64_t bin_label(int r, std::int64_t k_offset, int n_points);

/// DFT bin holding absolute label k.
int label_bin(std::int64_t k, int n_points);

/// Position -> momentum window, A_k = (dx / sqrt(2 pi)) sum_l psi_l e^{-ikx_l}.
MomentumAmplitudes forward_transform(const QuantumState& state,
                                     SpectralWorkspace& ws);

/// Momentum window -> position. Inverse of forward_transform.
QuantumState inverse_transform(const MomentumAmplitudes& amps, const Grid& grid,
                               SpectralWorkspace& ws);

}  // namespace qkr
