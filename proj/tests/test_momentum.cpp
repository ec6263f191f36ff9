#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cayleywalk/catalog.hpp"
#include "cayleywalk/momentum.hpp"
#include "doctest.h"

using namespace cw;

namespace {

std::vector<double> random_k(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> k(d);
  for (auto& x : k) x = u(rng);
  return k;
}

// Monte-Carlo volume of the zone via its bounding box.
double mc_volume(const BrillouinZone& bz, long long samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  long long inside = 0;
  for (long long i = 0; i < samples; ++i) {
    std::vector<double> k(bz.dim);
    for (int a = 0; a < bz.dim; ++a) k[a] = u(rng) * bz.box[a];
    if (bz.contains(k)) inside++;
  }
  double vol = double(inside) / double(samples);
  for (double b : bz.box) vol *= 2.0 * b;
  return vol;
}

QuantumWalk shift_walk_1d() {
  QuantumWalk w;
  w.ext = ExtensionData::trivial_lattice(1);
  w.gens = {GroupElement{{1}, 0}};
  w.coin_dim = 1;
  w.matrices = {CMat::Identity(1, 1)};
  return w;
}

}  // namespace

TEST_CASE("square-lattice Brillouin zone") {
  BrillouinZone bz = brillouin_zone({{1, 0}, {0, 1}}, 2);
  CHECK(bz.dim == 2);
  CHECK(bz.halfspaces.size() == 2);
  REQUIRE(bz.box.size() == 2);
  CHECK(bz.box[0] == doctest::Approx(M_PI));
  CHECK(bz.box[1] == doctest::Approx(M_PI));
  CHECK(bz.contains({0.0, 0.0}));
  CHECK(bz.contains({M_PI, -M_PI}));
  CHECK_FALSE(bz.contains({M_PI + 0.1, 0.0}));

  // the zone tiles momentum space: volume (2 pi)^2 for a unit covolume
  CHECK(mc_volume(bz, 200000, 11) ==
        doctest::Approx(std::pow(2.0 * M_PI, 2)).epsilon(0.01));
}

TEST_CASE("body-centered Brillouin zone") {
  std::vector<IVec> bcc = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
  BrillouinZone bz = brillouin_zone(bcc, 3);
  CHECK(bz.dim == 3);
  // six independent facet pairs |k_a +- k_b| <= pi survive deduplication
  CHECK(bz.halfspaces.size() == 6);
  for (const HalfSpace& h : bz.halfspaces) {
    CHECK(h.denom == 2);
    long long sq = 0;
    for (long long v : h.normal_num) sq += v * v;
    CHECK(sq == 2);
    CHECK(h.bound() == doctest::Approx(M_PI / 2.0));
  }
  // the four generators span an index-4 sublattice of Z^3, so the zone
  // volume is (2 pi)^3 / 4
  CHECK(mc_volume(bz, 400000, 12) ==
        doctest::Approx(std::pow(2.0 * M_PI, 3) / 4.0).epsilon(0.01));
}

TEST_CASE("A(k) is unitary for the catalog walks at random momenta") {
  std::mt19937 rng(3);
  std::vector<QuantumWalk> walks = {
      square2d_family(0.6),
      bcc3d_family({0.5, 0.5, 0.5, 0.5}, 0.3),
      dirac_walk(1, 0.6), dirac_walk(2, 0.3), dirac_walk(3, 0.3)};
  for (const QuantumWalk& w : walks) {
    int d = w.ext.dim;
    for (int t = 0; t < 10; ++t) {
      CMat A = walk_at_k(w, random_k(d, rng));
      double dev = (A * A.adjoint() - CMat::Identity(w.coin_dim, w.coin_dim))
                       .norm();
      CHECK(dev <= 1e-12);
    }
  }
}

TEST_CASE("A(0) is the sum of the coin matrices and needs a plain lattice") {
  QuantumWalk w = square2d_family(0.7);
  CMat sum = CMat::Zero(w.coin_dim, w.coin_dim);
  for (const CMat& m : w.matrices) sum += m;
  CHECK((walk_at_k(w, {0.0, 0.0}) - sum).norm() <= 1e-14);

  CHECK_THROWS(walk_at_k(dinfty_scalar_unitary(0.5), {0.0}));
}

TEST_CASE("eigenphases are sorted and live in (-pi, pi]") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    CMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<CMat> qr(m);
    CMat u = qr.householderQ();
    std::vector<double> ph = eigenphases(u);
    REQUIRE(ph.size() == 3);
    CHECK(std::is_sorted(ph.begin(), ph.end()));
    for (double p : ph) {
      CHECK(p > -M_PI - 1e-12);
      CHECK(p <= M_PI + 1e-12);
    }
    // phases reproduce the determinant's argument modulo 2 pi
    double sum = ph[0] + ph[1] + ph[2];
    double target = std::arg(u.determinant());
    double diff = std::remainder(sum - target, 2.0 * M_PI);
    CHECK(std::abs(diff) <= 1e-10);
  }
}

TEST_CASE("dispersion of a bare shift is linear in k") {
  QuantumWalk w = shift_walk_1d();
  DispersionGrid grid = dispersion(w, 33);
  CHECK(!grid.points.empty());
  for (const DispersionPoint& p : grid.points) {
    REQUIRE(p.omegas.size() == 1);
    double expect = std::remainder(-p.k[0], 2.0 * M_PI);
    CHECK(std::abs(std::abs(p.omegas[0]) - std::abs(expect)) <= 1e-10);
  }
}

TEST_CASE("massive 1D dispersion matches cos(omega) = n cos(k)") {
  const double m = 0.6, n = std::sqrt(1.0 - m * m);
  QuantumWalk w = dirac_walk(1, m);
  DispersionGrid grid = dispersion(w, 201);
  double min_abs = 1e9;
  for (const DispersionPoint& p : grid.points) {
    REQUIRE(p.omegas.size() == 2);
    // the two branches mirror each other
    CHECK(p.omegas[0] == doctest::Approx(-p.omegas[1]).epsilon(1e-10));
    CHECK(std::cos(p.omegas[1]) ==
          doctest::Approx(n * std::cos(p.k[0])).epsilon(1e-10));
    min_abs = std::min(min_abs, std::abs(p.omegas[1]));
  }
  // gap minimum sits at k = 0 with omega = arccos(n)
  CHECK(min_abs == doctest::Approx(std::acos(n)).epsilon(1e-10));
}

TEST_CASE("group velocity and diffusion on the 1D branches") {
  // massless walk moves at speed 1
  QuantumWalk w0 = dirac_walk(1, 0.0);
  VelocityDiffusion vd0 = group_velocity_and_diffusion(w0, {0.3}, 1);
  CHECK(std::abs(std::abs(vd0.v[0]) - 1.0) <= 1e-6);

  // massive walk is stationary at the band edge with curvature n/m
  const double m = 0.6, n = 0.8;
  QuantumWalk w = dirac_walk(1, m);
  VelocityDiffusion vd = group_velocity_and_diffusion(w, {0.0}, 1);
  CHECK(std::abs(vd.v[0]) <= 1e-6);
  CHECK(vd.d[0][0] == doctest::Approx(n / m).epsilon(1e-4));

  // the massive 2D bands are doubly degenerate, so tracking must refuse
  CHECK_THROWS(group_velocity_and_diffusion(dirac_walk(2, 0.3), {0.1, 0.2}, 0));
}

TEST_CASE("dispersion grid points all lie inside the zone") {
  QuantumWalk w = bcc3d_family({0.5, 0.5, 0.5, 0.5}, 0.0);
  DispersionGrid grid = dispersion(w, 9);
  CHECK(!grid.points.empty());
  for (const DispersionPoint& p : grid.points) {
    CHECK(grid.zone.contains(p.k, 1e-9));
    REQUIRE(p.omegas.size() == 2);
    CHECK(std::is_sorted(p.omegas.begin(), p.omegas.end()));
  }
}
