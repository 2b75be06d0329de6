#include "squid/grid_oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "squid/numerics.hpp"

namespace squid {

namespace {

// Extend the box beyond the eps = u_top turning points until the accumulated
// decay exponent eta * int sqrt(u - u_top) exceeds `exponent`.
double extend_boundary(const Device& d, double phi_start, double dir, double exponent) {
  const double step = 0.02;
  double acc = 0.0;
  double phi = phi_start;
  double prev_kappa = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double phi_next = phi + dir * step;
    const double v = u_pot(d.params, phi_next) - d.geom.u_top;
    const double kappa = v > 0.0 ? std::sqrt(v) : 0.0;
    acc += 0.5 * (prev_kappa + kappa) * step * d.scales.eta;
    phi = phi_next;
    prev_kappa = kappa;
    if (acc > exponent) break;
  }
  return phi;
}

struct Box {
  double lo, hi;
};

Box domain_box(const Device& d) {
  auto f_top = [&](double phi) { return u_pot(d.params, phi) - d.geom.u_top; };
  double t1 = d.geom.phi_min_left, t4 = d.geom.phi_min_right;
  double step = 0.1, x = t1 - step;
  while (u_pot(d.params, x) < d.geom.u_top) { t1 = x; step *= 1.5; x -= step; }
  t1 = num::brent_root(f_top, x, t1);
  step = 0.1; x = t4 + step;
  while (u_pot(d.params, x) < d.geom.u_top) { t4 = x; step *= 1.5; x += step; }
  t4 = num::brent_root(f_top, t4, x);
  return {extend_boundary(d, t1, -1.0, 14.0), extend_boundary(d, t4, +1.0, 14.0)};
}

struct TridiagResult {
  std::vector<double> eps;
  std::vector<std::vector<double>> states;
};

// Lowest n_levels eigenpairs of the Dirichlet finite-difference Hamiltonian;
// hbar^2/(2 M U0) = 1/eta^2.
TridiagResult solve_grid(const Device& d, const Box& box, int N, int n_levels,
                         bool want_states) {
  const double h = (box.hi - box.lo) / (N + 1);
  const double kin = 1.0 / (d.scales.eta * d.scales.eta * h * h);
  std::vector<double> diag(N), off(N > 1 ? N - 1 : 0, -kin);
  for (int i = 0; i < N; ++i)
    diag[i] = 2.0 * kin + u_pot(d.params, box.lo + h * (i + 1));

  std::vector<double> w(N);
  lapack_int m = 0;
  TridiagResult out;
  if (want_states) {
    std::vector<double> z(static_cast<size_t>(N) * n_levels);
    std::vector<lapack_int> isuppz(2 * static_cast<size_t>(n_levels));
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', N, diag.data(), off.data(), 0.0, 0.0, 1,
        n_levels, 0.0, &m, w.data(), z.data(), N, isuppz.data());
    if (info != 0 || m < n_levels)
      throw oracle_convergence_error("tridiagonal eigensolve failed");
    out.states.resize(n_levels);
    for (int k = 0; k < n_levels; ++k) {
      auto& psi = out.states[k];
      psi.resize(N);
      double norm2 = 0.0;
      for (int i = 0; i < N; ++i) {
        psi[i] = z[static_cast<size_t>(k) * N + i];
        norm2 += psi[i] * psi[i] * h;
      }
      const double inv = 1.0 / std::sqrt(norm2);
      // deterministic sign: first component above a tenth of the peak is positive
      double peak = 0.0;
      for (double v : psi) peak = std::max(peak, std::abs(v));
      double sign = 1.0;
      for (int i = 0; i < N; ++i)
        if (std::abs(psi[i]) > 0.1 * peak) { sign = psi[i] > 0 ? 1.0 : -1.0; break; }
      for (double& v : psi) v *= inv * sign;
    }
  } else {
    double z_dummy = 0.0;
    lapack_int isuppz_dummy[2] = {0, 0};
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'N', 'I', N, diag.data(), off.data(), 0.0, 0.0, 1,
        n_levels, 0.0, &m, w.data(), &z_dummy, 1, isuppz_dummy);
    if (info != 0 || m < n_levels)
      throw oracle_convergence_error("tridiagonal eigensolve failed");
  }
  out.eps.assign(w.begin(), w.begin() + n_levels);
  return out;
}

}  // namespace

GridSpectrum diagonalize(const Device& d, int n_levels, int N, double tol_conv) {
  if (N < 512) N = 512;
  const Box box = domain_box(d);

  // Two Richardson levels on the h^2 scheme (error expansion in even powers);
  // retained eigenvalues are the h^6-accurate combination.
  std::vector<double> raw_prev = solve_grid(d, box, N, n_levels, false).eps;
  std::vector<double> extrap_prev, rich_prev;
  int n_fine = N;
  for (int doubling = 1; doubling <= 4; ++doubling) {
    n_fine = N << doubling;
    std::vector<double> raw = solve_grid(d, box, n_fine, n_levels, false).eps;
    std::vector<double> extrap(n_levels), rich;
    for (int k = 0; k < n_levels; ++k)
      extrap[k] = (4.0 * raw[k] - raw_prev[k]) / 3.0;
    if (!extrap_prev.empty()) {
      rich.resize(n_levels);
      for (int k = 0; k < n_levels; ++k)
        rich[k] = (16.0 * extrap[k] - extrap_prev[k]) / 15.0;
    }
    if (!rich_prev.empty()) {
      double worst = 0.0;
      for (int k = 0; k < n_levels; ++k)
        worst = std::max(worst, std::abs(rich[k] - rich_prev[k]));
      if (worst < tol_conv) {
        TridiagResult fin = solve_grid(d, box, n_fine, n_levels, true);
        GridSpectrum out;
        out.h = (box.hi - box.lo) / (n_fine + 1);
        out.phi.resize(n_fine);
        for (int i = 0; i < n_fine; ++i) out.phi[i] = box.lo + out.h * (i + 1);
        out.eps = rich;
        out.eps_raw = fin.eps;
        out.states = std::move(fin.states);
        return out;
      }
    }
    raw_prev = std::move(raw);
    extrap_prev = std::move(extrap);
    rich_prev = std::move(rich);
  }
  throw oracle_convergence_error("grid-doubling did not converge after 3 doublings");
}

std::complex<double> exact_matrix_element(
    const GridSpectrum& spec, int i, int j,
    const std::function<std::complex<double>(double)>& zeta) {
  std::complex<double> acc = 0.0;
  const size_t n = spec.phi.size();
  for (size_t k = 0; k < n; ++k) {
    const double w = (k == 0 || k + 1 == n) ? 0.5 * spec.h : spec.h;
    acc += w * spec.states[i][k] * zeta(spec.phi[k]) * spec.states[j][k];
  }
  return acc;
}

namespace {

// Count of eigenvalues at or below vu on a coarse probe grid.
int count_below(const Device& d, const Box& box, double vu, int N) {
  const double h = (box.hi - box.lo) / (N + 1);
  const double kin = 1.0 / (d.scales.eta * d.scales.eta * h * h);
  std::vector<double> diag(N), off(N - 1, -kin);
  double u_floor = std::numeric_limits<double>::infinity();
  for (int i = 0; i < N; ++i) {
    diag[i] = 2.0 * kin + u_pot(d.params, box.lo + h * (i + 1));
    u_floor = std::min(u_floor, diag[i] - 2.0 * kin);
  }
  std::vector<double> w(N);
  lapack_int m = 0;
  double z_dummy = 0.0;
  lapack_int isuppz_dummy[2] = {0, 0};
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'N', 'V', N, diag.data(), off.data(), u_floor - 1.0, vu,
      1, 1, 0.0, &m, w.data(), &z_dummy, 1, isuppz_dummy);
  if (info != 0)
    throw oracle_convergence_error("tridiagonal eigensolve failed");
  return m;
}

// Eigenvalues inside [vl, vu], h^4 extrapolated from a fixed grid pair.
// Levels are computed by index (count fixed across the pair) so the
// extrapolation always combines the same physical level.
std::vector<double> window_levels(const Device& d, double vl, double vu, int N) {
  const Box box = domain_box(d);
  const int n_lev = count_below(d, box, vu, std::min(N, 2048)) + 2;
  const auto coarse = solve_grid(d, box, N, n_lev, false).eps;
  const auto fine = solve_grid(d, box, 2 * N, n_lev, false).eps;
  std::vector<double> out;
  for (int k = 0; k < n_lev; ++k) {
    const double e = (4.0 * fine[k] - coarse[k]) / 3.0;
    if (e >= vl && e <= vu) out.push_back(e);
  }
  return out;
}

}  // namespace

std::pair<double, double> exact_splitting_scan(const DeviceParams& base,
                                               double phi_lo, double phi_hi) {
  // Splitting of the near-top doublet: the two highest levels below the
  // barrier top (deeper doublets have their own, exponentially smaller
  // anticrossings and are not the ones tracked here).
  auto gap_at = [&](double phi_x) {
    DeviceParams p = base;
    p.phi_x = phi_x;
    const Device d = Device::make(p);
    const double hom = std::min(d.hbar_omega_p_red(true), d.hbar_omega_p_red(false));
    const double floor = std::max(d.geom.u_min_left, d.geom.u_min_right);
    const double vl = std::max(d.geom.u_top - 3.0 * hom, floor);
    const auto eps = window_levels(d, vl, d.geom.u_top, 4096);
    if (eps.size() < 2) return std::numeric_limits<double>::infinity();
    return eps[eps.size() - 1] - eps[eps.size() - 2];
  };
  const double phi_min = num::golden_min(gap_at, phi_lo, phi_hi, 1e-6);
  const double gap = gap_at(phi_min);
  if (!std::isfinite(gap))
    throw no_crossing_error("no doublet inside the scan window");
  return {phi_min, gap};
}

}  // namespace squid
