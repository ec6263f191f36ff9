#pragma once
// Momentum-space analysis for walks on Z^d: Brillouin zone polytope, the
// matrix A(k), dispersion relations, group velocity and diffusion matrix.

#include <vector>

#include "cayleywalk/walk.hpp"

namespace cw {

struct HalfSpace {
  IVec normal_num;      // integer numerator of the rational dual vector
  long long denom = 1;  // positive denominator
  // membership: |k . normal_num / denom| <= pi * |normal|^2
  double bound() const;  // pi * |num|^2 / denom^2
  double eval(const std::vector<double>& k) const;  // k . num / denom
};

struct BrillouinZone {
  int dim = 1;
  std::vector<HalfSpace> halfspaces;
  std::vector<double> box;  // per-axis half width of the bounding box
  bool contains(const std::vector<double>& k, double slack = 1e-12) const;
};

// Polytope from all nonsingular d-subsets of the positive kernel generators;
// dual vectors computed exactly in rationals.
BrillouinZone brillouin_zone(const std::vector<IVec>& plus_gens, int d);

// A(k) = sum_h exp(i k.h) A_h; requires a walk on the trivial quotient.
CMat walk_at_k(const QuantumWalk& w, const std::vector<double>& k);

struct DispersionPoint {
  std::vector<double> k;
  std::vector<double> omegas;  // sorted ascending in (-pi, pi]
};
struct DispersionGrid {
  BrillouinZone zone;
  std::vector<DispersionPoint> points;
};
// Rectangular n-per-axis grid over the zone's bounding box, clipped to zone
// membership; eigenphases sorted per point.
DispersionGrid dispersion(const QuantumWalk& w, int grid_points);

struct VelocityDiffusion {
  std::vector<double> v;               // group velocity (lattice units/step)
  std::vector<std::vector<double>> d;  // Hessian of omega at k0
};
// Central finite differences of the eigenphase branch through (k0, branch);
// the branch is tracked across displaced k by maximal eigenvector overlap.
// Throws on near-degenerate branches (gap < 1e-6 at k0).
VelocityDiffusion group_velocity_and_diffusion(const QuantumWalk& w,
                                               const std::vector<double>& k0,
                                               int branch,
                                               double step = 1e-4);

// Sorted eigenphases of a unitary matrix, in (-pi, pi].
std::vector<double> eigenphases(const CMat& u);

}  // namespace cw
