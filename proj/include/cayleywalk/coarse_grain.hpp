#pragma once
// Unitary regrouping of a scalar walk on a Q-by-Z^d group into a coin-|Q|
// walk on Z^d, with full provenance of where each scalar lands.

#include <string>
#include <vector>

#include "cayleywalk/walk.hpp"

namespace cw {

struct ProvenanceEntry {
  int cg_gen = 0;      // index into the coarse-grained generator list
  int row = 0, col = 0;  // coin matrix entry
  int scalar_gen = 0;  // index into the scalar walk's generator list
};

struct CoarseGrainedWalk {
  QuantumWalk base;                      // walk on Z^d, coin_dim = |Q|
  std::vector<ProvenanceEntry> provenance;
};

// Applies the regrouping rule
//   (A_ht)_{ij} = sum_h [ht = c_{q_i} h c_{q_j}^-1][q_i = q_j q_h^-1] z_h
// with coset representatives c_q = (0, q). Input must be scalar (s = 1) on a
// normalized extension with |Q| >= 2.
CoarseGrainedWalk coarse_grain(const QuantumWalk& w);

// Renders each coarse-grained matrix with the scalar symbols in place,
// e.g. "A_(1,0) = [[z_h1, z_h1c], [z_h2c, z_h2]]"; zeros print as "0".
// Labels default to the scalar walk's gen_labels.
std::string provenance_pattern(const CoarseGrainedWalk& cg,
                               const std::vector<std::string>& labels);

// Site-label bijection |n c_q> <-> |n>|q> on an L^d periodic patch:
// both sides are indexed identically, so this returns the flat index of
// (site, q) shared by the scalar state (position (n,q), coin 0) and the
// coarse-grained state (position n, coin q).
long long intertwined_index(int L, int d, const std::vector<int>& site, int q,
                            int quotient_order);

}  // namespace cw
