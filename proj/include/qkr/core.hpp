#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qkr/errors.hpp"
#include "qkr/numeric.hpp"

namespace qkr {

/// Which representative labels the angular grid carries for position
/// observables. Switching windows never moves amplitudes; it only changes
/// the x value assigned to each node.
enum class Window { ZeroToTwoPi, MinusPiToPi };

/// Uniform angular grid of n_points = 2^m nodes, spacing dx = 2pi/N.
/// Array index l always refers to the node at angle l*dx (mod 2pi).
struct Grid {
  int n_points = 0;
  double dx = 0.0;
  Window window = Window::ZeroToTwoPi;

  /// Position label of node l under the active window.
  double x_at(int l) const {
    const double x = l * dx;
    if (window == Window::ZeroToTwoPi) return x;
    return x <= pi ? x : x - two_pi;
  }
  /// Node sitting on the window boundary (x=0, or x=+-pi).
  int boundary_index() const {
    return window == Window::ZeroToTwoPi ? 0 : n_points / 2;
  }
};

Grid make_grid(int n_points, Window window = Window::ZeroToTwoPi);

/// Physical and control parameters of one run. K = alpha*beta is the
/// stochasticity parameter; gamma = sqrt(alpha/beta) sets the quadrature
/// scale; sigma is the initial packet width in x.
struct SimParams {
  double K = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double hbar = 0.0;
  double gamma = 0.0;
  double sigma = 0.0;

  /// Number of free-rotor levels populated by a single kick, ~2*alpha/hbar.
  double levels_per_kick() const { return 2.0 * alpha / hbar; }
};

/// Parameters from (K, sigma, hbar) with the packet width matched to the
/// coherent-state condition sigma^2 = hbar/(2 gamma):
///   alpha = sqrt(K) hbar / (2 sigma^2),  beta = sqrt(K) 2 sigma^2 / hbar.
SimParams derive_params(double K, double sigma, double hbar);

/// Parameters from explicit (alpha, beta); sigma is the packet width to be
/// used by the caller and need not satisfy the coherent-state condition.
SimParams params_from_alpha_beta(double alpha, double beta, double hbar,
                                 double sigma);

/// Initial Gaussian packet: center x0, integer momentum k0, width sigma.
struct GaussianSpec {
  double x0 = 0.0;
  std::int64_t k0 = 0;
  double sigma = 0.0;
};

enum class Localization { Localized, EdgeInMomentum, EdgeInPosition };

/// Outcome of the window-edge test with cutoff epsilon.
struct DelocalizationReport {
  Localization status = Localization::Localized;
  double edge_ratio_p = 0.0;
  double edge_ratio_x = 0.0;
  double epsilon = 0.0;

  bool localized() const { return status == Localization::Localized; }
};

/// Wave function on the position grid plus momentum-window bookkeeping.
/// Momentum labels run over [k_offset, k_offset + N). last_report is
/// maintained by the evolution driver; kick_step refuses to advance a state
/// whose last report is not Localized.
struct QuantumState {
  std::vector<std::complex<double>> amplitudes;
  Grid grid;
  std::int64_t k_offset = 0;
  int kick_count = 0;
  DelocalizationReport last_report{};
};

/// Sample the Gaussian packet on the grid and renormalize discretely.
/// The momentum window is centered on k0. Throws ResolutionError when
/// sigma < 4 dx and DomainError when x0 is outside the active window or
/// sigma is out of range.
QuantumState gaussian_packet(const Grid& grid, const GaussianSpec& spec);

/// sqrt(sum_l |psi_l|^2 dx).
double discrete_norm(const QuantumState& state);

/// First and second moments of x and p plus the symmetrized cross
/// correlator c = <xp+px>/2 - <x><p>.
struct CumulantSet {
  double mean_x = 0.0;
  double var_x = 0.0;
  double mean_p = 0.0;
  double var_p = 0.0;
  double c = 0.0;
};

}  // namespace qkr
