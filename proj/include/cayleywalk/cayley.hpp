#pragma once
// Generating sets and Cayley-graph predicates: symmetric closure,
// quadrangularity, coarse-grained generators, lattice-span checks.

#include <utility>
#include <vector>

#include "cayleywalk/group.hpp"

namespace cw {

struct GeneratingSet {
  ExtensionData ext;
  std::vector<GroupElement> plus_gens;  // S_+ (may contain the identity)
  bool includes_identity = false;       // loop edge allowed
};

// S = S_+ with inverses appended (S_+ order first, then inverses of
// non-self-inverse elements); duplicates removed, identity kept once.
std::vector<GroupElement> symmetric_closure(const GeneratingSet& gs);

struct QuadrangularityReport {
  bool holds = true;
  // ordered pairs (h1, h2) with h1 != h2 whose product h1 h2^-1 is realized
  // by no other ordered pair
  std::vector<std::pair<GroupElement, GroupElement>> violations;
};
QuadrangularityReport quadrangularity_check(const GeneratingSet& gs);

// One coarse-grained generator record per (h in S, q in Q):
// q' = q q_h^-1 and the kernel element c_{q'} h c_q^-1 in Z^d.
struct CoarseGrainedGenerator {
  GroupElement h;   // originating generator
  int q = 0;        // source coset
  int q_prime = 0;  // target coset
  IVec n_out;       // kernel element of c_{q'} h c_q^-1
};
std::vector<CoarseGrainedGenerator> coarse_grained_generators(
    const GeneratingSet& gs);

// Deduplicated kernel vectors from the records above (the set S_N).
std::vector<IVec> coarse_grained_kernel_set(const GeneratingSet& gs);

bool generates_full_lattice(const std::vector<IVec>& vectors, int d);

}  // namespace cw
