#include "cayleywalk/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cw {

std::vector<GroupElement> symmetric_closure(const GeneratingSet& gs) {
  std::vector<GroupElement> out;
  auto push_unique = [&](const GroupElement& g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  };
  for (const auto& g : gs.plus_gens) push_unique(g);
  for (const auto& g : gs.plus_gens) push_unique(inverse(gs.ext, g));
  return out;
}

QuadrangularityReport quadrangularity_check(const GeneratingSet& gs) {
  const auto s = symmetric_closure(gs);
  QuadrangularityReport rep;
  std::map<GroupElement, int> pair_count;
  const size_t n = s.size();
  std::vector<std::vector<GroupElement>> prod(n, std::vector<GroupElement>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      prod[i][j] = compose(gs.ext, s[i], inverse(gs.ext, s[j]));
      if (i != j) ++pair_count[prod[i][j]];
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pair_count[prod[i][j]] < 2) {
        rep.holds = false;
        rep.violations.emplace_back(s[i], s[j]);
      }
    }
  return rep;
}

std::vector<CoarseGrainedGenerator> coarse_grained_generators(
    const GeneratingSet& gs) {
  const auto& ext = gs.ext;
  if (ext.quotient.order < 2)
    throw std::invalid_argument(
        "coarse-grained generators need a nontrivial quotient");
  const auto s = symmetric_closure(gs);
  std::vector<CoarseGrainedGenerator> out;
  for (const auto& h : s) {
    for (int q = 0; q < ext.quotient.order; ++q) {
      CoarseGrainedGenerator rec;
      rec.h = h;
      rec.q = q;
      rec.q_prime = ext.quotient.mul(q, ext.quotient.inv(h.q));
      GroupElement cq{IVec(ext.dim, 0), q};
      GroupElement cqp{IVec(ext.dim, 0), rec.q_prime};
      GroupElement ker = compose(ext, compose(ext, cqp, h), inverse(ext, cq));
      if (ker.q != 0)
        throw std::logic_error("coarse-grained generator not in the kernel");
      rec.n_out = ker.n;
      out.push_back(rec);
    }
  }
  return out;
}

std::vector<IVec> coarse_grained_kernel_set(const GeneratingSet& gs) {
  std::vector<IVec> out;
  for (const auto& rec : coarse_grained_generators(gs))
    if (std::find(out.begin(), out.end(), rec.n_out) == out.end())
      out.push_back(rec.n_out);
  return out;
}

bool generates_full_lattice(const std::vector<IVec>& vectors, int d) {
  return lattice_spans(vectors, d);
}

}  // namespace cw
