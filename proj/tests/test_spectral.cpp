#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle_values.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/spectral.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

Matrix random_symmetric(testing::Rng& rng, std::size_t n, double scale = 1.0) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = scale * rng.uniform(-1.0, 1.0);
  return m;
}

Matrix dense_of(const TridiagonalMatrix& t) {
  Matrix m(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) m(i, i) = t.diagonal[i];
  for (std::size_t i = 0; i + 1 < t.size(); ++i) m(i, i + 1) = m(i + 1, i) = t.offdiagonal[i];
  return m;
}

double reconstruction_error(const Matrix& m, const std::vector<double>& values, const Matrix& vectors) {
  Matrix lambda(values.size(), values.size());
  for (std::size_t k = 0; k < values.size(); ++k) lambda(k, k) = values[k];
  return max_abs_diff(vectors * lambda * vectors.transpose(), m);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("2x2 by hand") {
  const auto s = eigh_tridiagonal({{0.0, 0.0}, {-0.5}});
  CHECK(s.energies[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(s.energies[1] == doctest::Approx(0.5).epsilon(1e-15));
  const double r = std::numbers::sqrt2 / 2;
  CHECK(s.modes(0, 0) == doctest::Approx(r).epsilon(1e-15));
  CHECK(s.modes(1, 0) == doctest::Approx(r).epsilon(1e-15));
  // (1,-1)/sqrt2 orientation: tie in magnitude, lowest index made positive.
  CHECK(s.modes(0, 1) == doctest::Approx(r).epsilon(1e-15));
  CHECK(s.modes(1, 1) == doctest::Approx(-r).epsilon(1e-15));
}

TEST_CASE("uniform open chain follows the cosine dispersion") {
  for (int L : {1, 2, 5, 17, 64}) {
    const auto e = eigvals_tridiagonal(hopping_matrix(make_chain(L, 0.0)));
    const int n = 2 * L;
    for (int k = 1; k <= n; ++k)
      CHECK(e[static_cast<std::size_t>(k - 1)] ==
            doctest::Approx(-std::cos(k * std::numbers::pi / (n + 1))).epsilon(1e-13).scale(1.0));
  }
  const auto e2 = eigvals_tridiagonal(hopping_matrix(make_chain(2, 0.0)));
  CHECK(e2[0] == doctest::Approx(-std::cos(std::numbers::pi / 5)));
  CHECK(e2[1] == doctest::Approx(-std::cos(2 * std::numbers::pi / 5)));
}

TEST_CASE("frozen high-precision energies") {
  const auto e = eigh_tridiagonal(hopping_matrix(make_chain(2, 1.0))).energies;
  for (std::size_t k = 0; k < 4; ++k) CHECK(e[k] == doctest::Approx(oracle_values::energies_L2_h1[k]).epsilon(1e-14));
  const auto e3 = eigvals_tridiagonal(hopping_matrix(make_chain(3, 0.5)));
  for (std::size_t k = 0; k < 6; ++k) CHECK(e3[k] == doctest::Approx(oracle_values::energies_L3_h0p5[k]).epsilon(1e-14));
}

TEST_CASE("gaps match extended-precision references, including graded spectra") {
  for (const auto& g : oracle_values::gaps) {
    CAPTURE(g.L);
    CAPTURE(g.h);
    const auto s = eigh_tridiagonal(hopping_matrix(make_chain(g.L, g.h)));
    CHECK(testing::rel_close(single_particle_gap(s), g.gap, 1e-8));
    CHECK(testing::rel_close(single_particle_gap(eigvals_tridiagonal(hopping_matrix(make_chain(g.L, g.h)))), g.gap, 1e-8));
  }
}

TEST_CASE("gap examples") {
  CHECK(single_particle_gap(eigh_tridiagonal(hopping_matrix(make_chain(1, 0.0, 2.5)))) == doctest::Approx(2.5));
  double prev = 1e300;
  for (int L : {2, 4, 6, 8}) {
    const double gap = single_particle_gap(eigvals_tridiagonal(hopping_matrix(make_chain(L, 1.0))));
    CHECK(gap < prev);
    prev = gap;
  }
  // h=3, L=4: within a factor 3 of the last SDRG scale J0 e^{-9}.
  const double gap = single_particle_gap(eigvals_tridiagonal(hopping_matrix(make_chain(4, 3.0))));
  const double last_scale = std::exp(-9.0);
  CHECK(gap > last_scale / 3);
  CHECK(gap < last_scale * 3);
}

TEST_CASE("dense symmetric examples") {
  const auto id = eigh_dense_symmetric(Matrix::identity(3));
  CHECK(id.values == std::vector<double>{1.0, 1.0, 1.0});
  Matrix p(2, 2, 0.5);
  const auto pv = eigvals_dense_symmetric(p);
  CHECK(pv[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(pv[1] == doctest::Approx(1.0));
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh_dense_symmetric(asym), InvalidArgument);
}

TEST_CASE("dense symmetric reconstruction over random matrices") {
  testing::Rng rng(21);
  for (int trial = 0; trial < testing::kRandomInstances; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 14));
    const Matrix m = random_symmetric(rng, n, std::exp(rng.uniform(-4, 4)));
    const auto eig = eigh_dense_symmetric(m);
    double scale = 0.0;
    for (double v : m.data()) scale = std::max(scale, std::abs(v));
    CHECK(reconstruction_error(m, eig.values, eig.vectors) <= 1e-12 * std::max(scale, 1e-300) * n);
    CHECK(max_abs_diff(eig.vectors.transpose() * eig.vectors, Matrix::identity(n)) <= 1e-12);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
    const auto only = eigvals_dense_symmetric(m);
    for (std::size_t k = 0; k < n; ++k) CHECK(only[k] == doctest::Approx(eig.values[k]).epsilon(1e-12).scale(scale));
  }
}

TEST_CASE("householder tridiagonalization is an orthogonal similarity") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 12));
    const Matrix m = random_symmetric(rng, n);
    Matrix q;
    const TridiagonalMatrix t = householder_tridiagonalize(m, &q);
    CHECK(max_abs_diff(q * dense_of(t) * q.transpose(), m) <= 1e-12 * n);
    CHECK(max_abs_diff(q.transpose() * q, Matrix::identity(n)) <= 1e-13 * n);
  }
}

TEST_CASE("single-body spectrum invariants over random chains") {
  testing::Rng rng(23);
  for (int trial = 0; trial < testing::kRandomInstances; ++trial) {
    const ChainSpec spec = rng.chain(40, 2.0);
    CAPTURE(spec.L);
    CAPTURE(spec.h);
    const TridiagonalMatrix t = hopping_matrix(spec);
    const auto s = eigh_tridiagonal(t);
    const std::size_t n = spec.sites();
    const Matrix& v = s.modes;
    CHECK(max_abs_diff(v.transpose() * v, Matrix::identity(n)) <= 1e-12 * n);
    CHECK(reconstruction_error(dense_of(t), s.energies, v) <= 1e-13 * spec.J0 * n);
    for (std::size_t k = 0; k < n; ++k) {
      // Particle-hole symmetry.
      CHECK(s.energies[k] == doctest::Approx(-s.energies[n - 1 - k]).epsilon(1e-12).scale(spec.J0));
      // Orientation: the first component within 1e-10 of the largest magnitude is positive.
      const auto col = v.column(k);
      double biggest = 0.0;
      for (double x : col) biggest = std::max(biggest, std::abs(x));
      const auto it = std::find_if(col.begin(), col.end(), [&](double x) { return std::abs(x) >= biggest * (1 - 1e-10); });
      CHECK(*it > 0.0);
    }
    CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
  }
}

TEST_CASE("ground-state occupation") {
  SUBCASE("L=1") {
    const auto s = eigh_tridiagonal(hopping_matrix(make_chain(1, 0.0)));
    const auto occ = ground_state_occupation(s, 1);
    CHECK(occ.indices == std::vector<std::size_t>{0});
    CHECK(occ.highest_occupied == doctest::Approx(-0.5));
    CHECK(occ.lowest_empty == doctest::Approx(0.5));
  }
  SUBCASE("L=3 h=1 occupies the negative energies") {
    const auto s = eigh_tridiagonal(hopping_matrix(make_chain(3, 1.0)));
    const auto occ = ground_state_occupation(s, 3);
    CHECK(occ.indices == std::vector<std::size_t>{0, 1, 2});
    for (auto k : occ.indices) CHECK(s.energies[k] < 0.0);
  }
  SUBCASE("strong inhomogeneity keeps a resolvable Fermi gap") {
    const auto s = eigh_tridiagonal(hopping_matrix(make_chain(8, 4.0)));
    CHECK_NOTHROW(ground_state_occupation(s, 8));
  }
  SUBCASE("degenerate Fermi level is an error") {
    SingleBodySpectrum s;
    s.energies = {-1.0, 0.0, 0.0, 1.0};
    s.modes = Matrix::identity(4);
    CHECK_THROWS_AS(ground_state_occupation(s, 2), DegeneracyError);
    CHECK_THROWS_AS(ground_state_occupation(s, 3), InvalidArgument);
    s.energies = {-1.0, -0.1, 0.1, 1.0};
    CHECK_THROWS_AS(ground_state_occupation(s, 2, 0.5), DegeneracyError);
  }
}

TEST_CASE("correlation matrix") {
  SUBCASE("L=1") {
    const GroundState gs = solve_ground_state(make_chain(1, 0.0));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(gs.correlations.entries(i, j) == doctest::Approx(0.5));
  }
  SUBCASE("submatrix equals the principal block") {
    const GroundState gs = solve_ground_state(make_chain(6, 0.7));
    const std::vector<std::size_t> sites{1, 4, 5, 9};
    const Matrix sub = correlation_submatrix(gs.spectrum, gs.occupied, sites);
    for (std::size_t a = 0; a < sites.size(); ++a)
      for (std::size_t b = 0; b < sites.size(); ++b)
        CHECK(sub(a, b) == doctest::Approx(gs.correlations.entries(sites[a], sites[b])).epsilon(1e-15));
  }
  SUBCASE("invariants over random chains") {
    testing::Rng rng(24);
    for (int trial = 0; trial < testing::kRandomInstances; ++trial) {
      const ChainSpec spec = rng.chain(30, 2.0);
      const GroundState gs = solve_ground_state(spec);
      const Matrix& c = gs.correlations.entries;
      const std::size_t n = spec.sites();
      double trace = 0.0;
      for (std::size_t i = 0; i < n; ++i) trace += c(i, i);
      CHECK(trace == doctest::Approx(spec.L).epsilon(1e-12));
      CHECK(asymmetry(c) <= 1e-14);
      CHECK(max_abs_diff(c * c, c) <= 1e-12 * n);
      for (double nu : eigvals_dense_symmetric(c)) {
        CHECK(nu >= -1e-12);
        CHECK(nu <= 1.0 + 1e-12);
      }
      // Half filling on a bipartite lattice: every site is half occupied.
      for (std::size_t i = 0; i < n; ++i) CHECK(c(i, i) == doctest::Approx(0.5).epsilon(1e-10));
    }
  }
}

}  // TEST_SUITE
