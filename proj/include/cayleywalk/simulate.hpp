#pragma once
// Direct state-vector evolution of a walk on an L^d periodic patch of the
// group, plus the scalar-vs-coarse-grained cross check.

#include <vector>

#include "cayleywalk/walk.hpp"

namespace cw {

struct TorusPatch {
  int L = 1;      // sites per lattice axis
  int d = 1;      // lattice dimension
  int qsize = 1;  // quotient order (positions are (site, q))
  int s = 1;      // coin dimension

  long long sites() const;       // L^d * qsize
  long long amplitudes() const;  // sites() * s
};

struct WalkState {
  TorusPatch patch;
  std::vector<Complex> amp;  // ((site * qsize + q) * s + coin), site row-major

  long long index(const std::vector<int>& site, int q, int coin) const;
  double norm() const;
};

// Delta state at lattice site `site` (defaults to the origin), quotient
// index q, with the given coin vector (defaults to e_0).
WalkState delta_state(const TorusPatch& patch,
                      const std::vector<int>& site = {}, int q = 0,
                      const std::vector<Complex>& coin = {});

// Normalized Gaussian wave packet: amplitude exp(-|x|^2/(4 width^2))
// exp(i k0.x) on the q = 0 sheet with the given coin vector. width must be
// positive.
WalkState gaussian_state(const TorusPatch& patch, const std::vector<double>& k0,
                         double width, const std::vector<Complex>& coin = {});

// One step of the walk: psi'(g h^-1) += A_h psi(g), lattice part mod L.
WalkState step(const QuantumWalk& w, const WalkState& state);
WalkState evolve(const QuantumWalk& w, WalkState state, int steps);

// Per-position probabilities (coin traced out), indexed site * qsize + q.
std::vector<double> probability_distribution(const WalkState& state);

// Evolves a scalar walk on the (site, q) patch and its coarse-graining on
// the coin-|Q| patch from intertwined delta states at the identity, and
// returns the maximum amplitude difference after `steps` steps under the
// site-label bijection |n c_q> <-> |n>|q>.
double compare_representations(const QuantumWalk& scalar_walk, int steps,
                               int L);

}  // namespace cw
