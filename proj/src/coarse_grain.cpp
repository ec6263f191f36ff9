#include "cayleywalk/coarse_grain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cw {

CoarseGrainedWalk coarse_grain(const QuantumWalk& w) {
  if (w.coin_dim != 1)
    throw std::invalid_argument("coarse_grain expects a scalar walk (s = 1)");
  const auto& ext = w.ext;
  const int nq = ext.quotient.order;
  if (nq < 2)
    throw std::invalid_argument("coarse_grain needs a nontrivial quotient");
  for (int q = 0; q < nq; ++q)
    if (!ivec_is_zero(ext.cocycle[0][q]) || !ivec_is_zero(ext.cocycle[q][0]))
      throw std::invalid_argument("cocycle must be normalized first");

  CoarseGrainedWalk out;
  out.base.ext = ExtensionData::trivial_lattice(ext.dim);
  out.base.coin_dim = nq;
  out.base.tolerance = w.tolerance;

  std::vector<IVec> cg_gens;
  auto slot = [&](const IVec& v) {
    auto it = std::find(cg_gens.begin(), cg_gens.end(), v);
    if (it != cg_gens.end())
      return static_cast<int>(it - cg_gens.begin());
    cg_gens.push_back(v);
    out.base.matrices.push_back(CMat::Zero(nq, nq));
    return static_cast<int>(cg_gens.size()) - 1;
  };

  for (size_t gi = 0; gi < w.gens.size(); ++gi) {
    const GroupElement& h = w.gens[gi];
    const Complex z = w.matrices[gi](0, 0);
    for (int qj = 0; qj < nq; ++qj) {
      const int qi = ext.quotient.mul(qj, ext.quotient.inv(h.q));
      GroupElement cqi{IVec(ext.dim, 0), qi};
      GroupElement cqj{IVec(ext.dim, 0), qj};
      GroupElement ht =
          compose(ext, compose(ext, cqi, h), inverse(ext, cqj));
      if (ht.q != 0)
        throw std::logic_error("regrouped generator left the kernel");
      int k = slot(ht.n);
      out.base.matrices[k](qi, qj) += z;
      out.provenance.push_back(
          ProvenanceEntry{k, qi, qj, static_cast<int>(gi)});
    }
  }
  for (const auto& v : cg_gens) {
    out.base.gens.push_back(GroupElement{v, 0});
    if (ivec_is_zero(v)) out.base.includes_identity = true;
  }
  return out;
}

std::string provenance_pattern(const CoarseGrainedWalk& cg,
                               const std::vector<std::string>& labels) {
  const int nq = cg.base.coin_dim;
  const int ng = static_cast<int>(cg.base.gens.size());
  std::vector<std::vector<std::string>> cells(
      ng, std::vector<std::string>(nq * nq));
  for (const auto& p : cg.provenance) {
    std::string sym = p.scalar_gen < static_cast<int>(labels.size())
                          ? labels[p.scalar_gen]
                          : "z" + std::to_string(p.scalar_gen);
    auto& cell = cells[p.cg_gen][p.row * nq + p.col];
    cell = cell.empty() ? sym : cell + "+" + sym;
  }
  std::ostringstream os;
  for (int g = 0; g < ng; ++g) {
    os << "A_" << ivec_str(cg.base.gens[g].n) << " = [";
    for (int i = 0; i < nq; ++i) {
      os << "[";
      for (int j = 0; j < nq; ++j) {
        const auto& cell = cells[g][i * nq + j];
        os << (cell.empty() ? "0" : cell);
        if (j + 1 < nq) os << ", ";
      }
      os << "]";
      if (i + 1 < nq) os << ", ";
    }
    os << "]\n";
  }
  return os.str();
}

long long intertwined_index(int L, int d, const std::vector<int>& site, int q,
                            int quotient_order) {
  long long idx = 0;
  for (int i = 0; i < d; ++i) {
    int c = ((site[i] % L) + L) % L;
    idx = idx * L + c;
  }
  return idx * quotient_order + q;
}

}  // namespace cw
