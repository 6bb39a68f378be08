#include "rainbow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr int kMaxSweepsPerEigenvalue = 50;
constexpr int kRelativeSweeps = 20;

double pythag(double a, double b) {
  const double absa = std::abs(a);
  const double absb = std::abs(b);
  if (absa > absb) {
    const double r = absb / absa;
    return absa * std::sqrt(1.0 + r * r);
  }
  if (absb == 0.0) return 0.0;
  const double r = absa / absb;
  return absb * std::sqrt(1.0 + r * r);
}

// Implicit-shift QL on (d, e). e[i] couples i and i+1; e[n-1] is scratch.
// When `zt` is non-null its rows are the running eigenvectors: the rotation
// acting on columns (i, i+1) of Z is applied to rows (i, i+1) of Zᵀ.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* zt) {
  const std::size_t n = d.size();
  if (n < 2) return;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m = l;
    for (;;) {
      // Relative deflation keeps small eigenvalues of graded matrices. A tiny
      // eigenvalue buried in rounding noise from O(norm) neighbours never
      // meets it, so stalled iterations fall back to the absolute test.
      const bool absolute = sweeps >= kRelativeSweeps;
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        if (absolute && std::abs(e[m]) <= eps * norm) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweepsPerEigenvalue)
        throw ConvergenceError("QL iteration did not converge for eigenvalue index " +
                               std::to_string(l) + " of a " + std::to_string(n) + "x" +
                               std::to_string(n) + " tridiagonal matrix (d[l]=" +
                               std::to_string(d[l]) + ", e[l]=" + std::to_string(e[l]) + ")");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = pythag(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const std::size_t i = ii;
        double f = s * e[i];
        const double b = c * e[i];
        r = pythag(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (zt != nullptr) {
          auto zi = zt->row(i);
          auto zi1 = zt->row(i + 1);
          for (std::size_t k = 0; k < n; ++k) {
            f = zi1[k];
            zi1[k] = s * zi[k] + c * f;
            zi[k] = c * zi[k] - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

// Sort ascending and orient each vector (largest |component| positive,
// lowest index on ties). `zt` rows are eigenvectors.
void finalize(std::vector<double>& d, const Matrix& zt, std::vector<double>& values_out,
              Matrix& vectors_out) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  values_out.resize(n);
  vectors_out = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = zt.row(order[k]);
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v[i]) >= vmax * (1.0 - 1e-10)) {
        pivot = i;
        break;
      }
    }
    const double sign = v[pivot] < 0.0 ? -1.0 : 1.0;
    values_out[k] = d[order[k]];
    for (std::size_t i = 0; i < n; ++i) vectors_out(i, k) = sign * v[i];
  }
}

void check_tridiagonal(const TridiagonalMatrix& t) {
  if (t.size() == 0) throw InvalidArgument("tridiagonal matrix is empty");
  if (t.offdiagonal.size() + 1 != t.size())
    throw InvalidArgument("tridiagonal matrix: offdiagonal must have size()-1 entries");
}

void check_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("eigh_dense_symmetric: matrix is not square");
  if (m.rows() == 0) throw InvalidArgument("eigh_dense_symmetric: matrix is empty");
  double scale = 0.0;
  for (double x : m.data()) scale = std::max(scale, std::abs(x));
  if (asymmetry(m) > 1e-10 * std::max(scale, std::numeric_limits<double>::min()))
    throw InvalidArgument("eigh_dense_symmetric: matrix is not symmetric (max |a_ij - a_ji| = " +
                          std::to_string(asymmetry(m)) + ")");
}

}  // namespace

SingleBodySpectrum eigh_tridiagonal(const TridiagonalMatrix& t) {
  check_tridiagonal(t);
  const std::size_t n = t.size();
  std::vector<double> d = t.diagonal;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiagonal.begin(), t.offdiagonal.end(), e.begin());
  Matrix zt = Matrix::identity(n);
  ql_implicit(d, e, &zt);

  SingleBodySpectrum out;
  finalize(d, zt, out.energies, out.modes);
  return out;
}

std::vector<double> eigvals_tridiagonal(const TridiagonalMatrix& t) {
  check_tridiagonal(t);
  std::vector<double> d = t.diagonal;
  std::vector<double> e(t.size(), 0.0);
  std::copy(t.offdiagonal.begin(), t.offdiagonal.end(), e.begin());
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

TridiagonalMatrix householder_tridiagonalize(const Matrix& m, Matrix* q) {
  const std::size_t n = m.rows();
  Matrix a = m;
  if (q != nullptr) *q = Matrix::identity(n);
  std::vector<double> v(n), p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Reflect a[k+1.., k] onto alpha·e1.
    double sigma = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) sigma += a(i, k) * a(i, k);
    const double tail = sigma - a(k + 1, k) * a(k + 1, k);
    if (tail == 0.0) continue;

    const double x0 = a(k + 1, k);
    const double alpha = -std::copysign(std::sqrt(sigma), x0);
    std::fill(v.begin(), v.end(), 0.0);
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    const double vtv = v[k + 1] * v[k + 1] + tail;
    const double tau = 2.0 / vtv;

    // p = tau·A·v over the trailing block, w = p - (tau/2)(vᵀp) v.
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto row = a.row(i);
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += row[j] * v[j];
      p[i] = tau * s;
    }
    double vtp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vtp += v[i] * p[i];
    const double kfac = 0.5 * tau * vtp;
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kfac * v[i];

    for (std::size_t i = k + 1; i < n; ++i) {
      auto row = a.row(i);
      const double vi = v[i];
      const double pi = p[i];
      for (std::size_t j = k + 1; j < n; ++j) row[j] -= vi * p[j] + pi * v[j];
    }
    a(k + 1, k) = alpha;
    a(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }

    if (q != nullptr) {
      // Q <- Q·H_k
      for (std::size_t r = 0; r < n; ++r) {
        auto row = q->row(r);
        double s = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) s += row[j] * v[j];
        s *= tau;
        for (std::size_t j = k + 1; j < n; ++j) row[j] -= s * v[j];
      }
    }
  }

  TridiagonalMatrix t;
  t.diagonal.resize(n);
  t.offdiagonal.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) t.diagonal[i] = a(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) t.offdiagonal[i] = a(i + 1, i);
  return t;
}

SymmetricEigen eigh_dense_symmetric(const Matrix& m) {
  check_symmetric(m);
  const std::size_t n = m.rows();
  Matrix q;
  const TridiagonalMatrix t = householder_tridiagonalize(m, &q);
  std::vector<double> d = t.diagonal;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiagonal.begin(), t.offdiagonal.end(), e.begin());
  Matrix zt = q.transpose();
  ql_implicit(d, e, &zt);

  SymmetricEigen out;
  finalize(d, zt, out.values, out.vectors);
  return out;
}

std::vector<double> eigvals_dense_symmetric(const Matrix& m) {
  check_symmetric(m);
  return eigvals_tridiagonal(householder_tridiagonalize(m, nullptr));
}

double default_fermi_tolerance(double highest_occupied, double lowest_empty) {
  return 64.0 * std::numeric_limits<double>::epsilon() *
         std::max(std::abs(highest_occupied), std::abs(lowest_empty));
}

OccupiedModes ground_state_occupation(const SingleBodySpectrum& spectrum, int L, double tolerance) {
  const std::size_t n = spectrum.energies.size();
  if (L < 1 || n != 2 * static_cast<std::size_t>(L))
    throw InvalidArgument("ground_state_occupation: spectrum has " + std::to_string(n) +
                          " modes, expected 2L = " + std::to_string(2 * L));
  const std::size_t half = static_cast<std::size_t>(L);
  OccupiedModes occ;
  occ.highest_occupied = spectrum.energies[half - 1];
  occ.lowest_empty = spectrum.energies[half];
  if (tolerance < 0.0) tolerance = default_fermi_tolerance(occ.highest_occupied, occ.lowest_empty);
  const double gap = occ.lowest_empty - occ.highest_occupied;
  if (!(gap > tolerance)) {
    std::ostringstream msg;
    msg << "ground_state_occupation: Fermi level degenerate, eps_(L+1) - eps_(L) = " << gap
        << " <= tolerance " << tolerance;
    throw DegeneracyError(msg.str());
  }
  occ.indices.resize(half);
  std::iota(occ.indices.begin(), occ.indices.end(), std::size_t{0});
  return occ;
}

Matrix correlation_submatrix(const SingleBodySpectrum& spectrum, const OccupiedModes& occupied,
                             const std::vector<std::size_t>& sites) {
  const std::size_t n = spectrum.modes.rows();
  const std::size_t b = sites.size();
  const std::size_t nocc = occupied.indices.size();
  // Pack the occupied amplitudes on the selected sites row-wise.
  Matrix amp(b, nocc);
  for (std::size_t r = 0; r < b; ++r) {
    if (sites[r] >= n) throw InvalidArgument("correlation_submatrix: site index out of range");
    const auto mrow = spectrum.modes.row(sites[r]);
    for (std::size_t k = 0; k < nocc; ++k) amp(r, k) = mrow[occupied.indices[k]];
  }
  Matrix c(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    const auto ai = amp.row(i);
    for (std::size_t j = i; j < b; ++j) {
      const double v = dot(ai, amp.row(j));
      c(i, j) = v;
      c(j, i) = v;
    }
  }
  return c;
}

CorrelationMatrix correlation_matrix(const SingleBodySpectrum& spectrum,
                                     const OccupiedModes& occupied) {
  std::vector<std::size_t> all(spectrum.modes.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return CorrelationMatrix{correlation_submatrix(spectrum, occupied, all)};
}

double single_particle_gap(const std::vector<double>& e) {
  if (e.size() < 2 || e.size() % 2 != 0)
    throw InvalidArgument("single_particle_gap: need an even number (2L) of energies");
  const std::size_t half = e.size() / 2;
  return e[half] - e[half - 1];
}

double single_particle_gap(const SingleBodySpectrum& spectrum) {
  return single_particle_gap(spectrum.energies);
}

GroundState solve_ground_state(const ChainSpec& spec) {
  GroundState gs;
  gs.spec = spec;
  gs.spectrum = eigh_tridiagonal(hopping_matrix(spec));
  gs.occupied = ground_state_occupation(gs.spectrum, spec.L);
  gs.correlations = correlation_matrix(gs.spectrum, gs.occupied);
  return gs;
}

}  // namespace rainbow
