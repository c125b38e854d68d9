#include "qkr/core.hpp"

#include <cmath>
#include <string>

namespace qkr {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError(std::string(name) + " must be strictly positive");
}

}  // namespace

Grid make_grid(int n_points, Window window) {
  if (!is_power_of_two(n_points) || n_points < 8)
    throw DomainError("n_points must be a power of two >= 8");
  Grid g;
  g.n_points = n_points;
  g.dx = two_pi / n_points;
  g.window = window;
  return g;
}

SimParams derive_params(double K, double sigma, double hbar) {
  require_positive(K, "K");
  require_positive(sigma, "sigma");
  require_positive(hbar, "hbar");
  if (sigma >= 0.3)
    throw DomainError("sigma must be < 0.3 to keep the periodized tail below round-off");
  const double root_k = std::sqrt(K);
  SimParams p;
  p.K = K;
  p.alpha = root_k * hbar / (2.0 * sigma * sigma);
  p.beta = root_k * 2.0 * sigma * sigma / hbar;
  p.hbar = hbar;
  p.gamma = hbar / (2.0 * sigma * sigma);
  p.sigma = sigma;
  return p;
}

SimParams params_from_alpha_beta(double alpha, double beta, double hbar,
                                 double sigma) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_positive(hbar, "hbar");
  require_positive(sigma, "sigma");
  SimParams p;
  p.K = alpha * beta;
  p.alpha = alpha;
  p.beta = beta;
  p.hbar = hbar;
  p.gamma = std::sqrt(alpha / beta);
  p.sigma = sigma;
  return p;
}

QuantumState gaussian_packet(const Grid& grid, const GaussianSpec& spec) {
  if (grid.n_points <= 0) throw DomainError("grid is not initialized");
  require_positive(spec.sigma, "sigma");
  if (spec.sigma >= 0.3)
    throw DomainError("sigma must be < 0.3");
  if (spec.sigma < 4.0 * grid.dx)
    throw ResolutionError("packet width sigma < 4 dx is not resolvable on this grid");
  const double lo = grid.window == Window::ZeroToTwoPi ? 0.0 : -pi;
  const double hi = lo + two_pi;
  if (!(spec.x0 >= lo && spec.x0 < hi))
    throw DomainError("x0 lies outside the active position window");

  QuantumState state;
  state.grid = grid;
  state.amplitudes.resize(grid.n_points);
  const double inv_4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
  for (int l = 0; l < grid.n_points; ++l) {
    const double u = grid.x_at(l) - spec.x0;
    const double envelope = std::exp(-u * u * inv_4s2);
    state.amplitudes[l] = std::polar(envelope, double(spec.k0) * u);
  }
  // Discrete renormalization replaces the continuum prefactor.
  KahanSum norm2;
  for (const auto& a : state.amplitudes) norm2.add(std::norm(a));
  const double scale = 1.0 / std::sqrt(norm2.value() * grid.dx);
  for (auto& a : state.amplitudes) a *= scale;

  state.k_offset = spec.k0 - grid.n_points / 2;
  state.kick_count = 0;
  return state;
}

double discrete_norm(const QuantumState& state) {
  KahanSum norm2;
  for (const auto& a : state.amplitudes) norm2.add(std::norm(a));
  return std::sqrt(norm2.value() * state.grid.dx);
}

}  // namespace qkr
