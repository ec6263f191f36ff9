#include "cayleywalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

namespace cw {

double default_tolerance() {
  if (const char* env = std::getenv("CAYLEYWALK_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e-10;
}

namespace {

// Groups ordered generator pairs by the group element h h'^-1 (left) and
// h^-1 h' (right).
struct PairTable {
  std::vector<GroupElement> elements;
  // per element: list of (i, j) pairs for each ordering
  std::vector<std::vector<std::pair<int, int>>> left, right;
  int identity_index = -1;
};

PairTable build_pair_table(const ExtensionData& ext,
                           const std::vector<GroupElement>& gens) {
  PairTable t;
  std::map<GroupElement, int> index;
  auto slot = [&](const GroupElement& g) {
    auto it = index.find(g);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(t.elements.size());
    index.emplace(g, id);
    t.elements.push_back(g);
    t.left.emplace_back();
    t.right.emplace_back();
    return id;
  };
  const int n = static_cast<int>(gens.size());
  std::vector<GroupElement> invs(n);
  for (int i = 0; i < n; ++i) invs[i] = inverse(ext, gens[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.left[slot(compose(ext, gens[i], invs[j]))].emplace_back(i, j);
      t.right[slot(compose(ext, invs[i], gens[j]))].emplace_back(i, j);
    }
  t.identity_index = slot(identity_element(ext));
  return t;
}

}  // namespace

UnitarityReport unitarity_residual(const QuantumWalk& w) {
  if (w.matrices.size() != w.gens.size())
    throw std::invalid_argument("missing transition matrix for a generator");
  const int s = w.coin_dim;
  for (const auto& m : w.matrices)
    if (m.rows() != s || m.cols() != s)
      throw std::invalid_argument("transition matrix has wrong shape");
  PairTable t = build_pair_table(w.ext, w.gens);
  UnitarityReport rep;
  const CMat id = CMat::Identity(s, s);
  for (size_t e = 0; e < t.elements.size(); ++e) {
    UnitarityConstraint c;
    c.g = t.elements[e];
    CMat lsum = CMat::Zero(s, s), rsum = CMat::Zero(s, s);
    for (auto [i, j] : t.left[e])
      lsum += w.matrices[i] * w.matrices[j].adjoint();
    for (auto [i, j] : t.right[e])
      rsum += w.matrices[i].adjoint() * w.matrices[j];
    if (static_cast<int>(e) == t.identity_index) {
      lsum -= id;
      rsum -= id;
    }
    // Frobenius norm normalized by sqrt(s), so a uniform defect c*I on the
    // identity constraint reads as |c| for every coin dimension.
    c.left_norm = lsum.norm() / std::sqrt(static_cast<double>(s));
    c.right_norm = rsum.norm() / std::sqrt(static_cast<double>(s));
    rep.residual = std::max({rep.residual, c.left_norm, c.right_norm});
    rep.breakdown.push_back(std::move(c));
  }
  return rep;
}

bool verify_unitarity(const QuantumWalk& w) {
  return unitarity_residual(w).residual <= w.tol();
}

IsotropyResult isotropy_check(const QuantumWalk& w, const IsotropyRep& rep) {
  IsotropyResult res;
  const int n = static_cast<int>(w.gens.size());
  if (rep.perms.size() != rep.unitaries.size())
    throw std::invalid_argument("permutation/unitary count mismatch");
  for (const auto& p : rep.perms) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("permutation does not act on generators");
    std::vector<bool> seen(n, false);
    for (int x : p) {
      if (x < 0 || x >= n || seen[x])
        throw std::invalid_argument("not a permutation of generator indices");
      seen[x] = true;
    }
  }
  // closure under composition (group property) on the permutation side
  auto find_perm = [&](const std::vector<int>& p) {
    for (const auto& q : rep.perms)
      if (q == p) return true;
    return false;
  };
  for (const auto& a : rep.perms)
    for (const auto& b : rep.perms) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = a[b[i]];
      if (!find_perm(ab))
        throw std::invalid_argument("permutation set not closed (not a group)");
    }
  // invariance deviation
  for (size_t l = 0; l < rep.perms.size(); ++l) {
    const auto& p = rep.perms[l];
    const CMat& u = rep.unitaries[l];
    for (int h = 0; h < n; ++h) {
      double dev = (w.matrices[p[h]] - u * w.matrices[h] * u.adjoint()).norm();
      res.max_deviation = std::max(res.max_deviation, dev);
    }
  }
  // transitivity on classes of generators with equal group-element order
  auto elem_order = [&](const GroupElement& g) {
    GroupElement x = g;
    for (int r = 1; r <= 64; ++r) {
      if (x == identity_element(w.ext)) return r - 1 == 0 ? 1 : r;
      if (x.q == 0 && !ivec_is_zero(x.n)) return 0;  // infinite order
      x = compose(w.ext, x, g);
    }
    return 0;
  };
  std::vector<int> orders(n);
  for (int i = 0; i < n; ++i) orders[i] = elem_order(w.gens[i]);
  res.transitive = true;
  for (int i = 0; i < n && res.transitive; ++i)
    for (int j = 0; j < n; ++j) {
      if (orders[i] != orders[j]) continue;
      bool reachable = false;
      for (const auto& p : rep.perms)
        if (p[i] == j) { reachable = true; break; }
      if (!reachable) { res.transitive = false; break; }
    }
  res.isotropic = res.transitive && res.max_deviation <= w.tol();
  return res;
}

namespace {

// Residual of a scalar assignment, reusing the pair table.
double scalar_residual(const PairTable& t, const std::vector<Complex>& z) {
  double worst = 0.0;
  for (size_t e = 0; e < t.elements.size(); ++e) {
    Complex lsum = 0.0, rsum = 0.0;
    for (auto [i, j] : t.left[e]) lsum += z[i] * std::conj(z[j]);
    for (auto [i, j] : t.right[e]) rsum += std::conj(z[i]) * z[j];
    if (static_cast<int>(e) == t.identity_index) {
      lsum -= 1.0;
      rsum -= 1.0;
    }
    worst = std::max({worst, std::abs(lsum), std::abs(rsum)});
  }
  return worst;
}

// Smooth sum-of-squares objective used by the optimizer.
double scalar_objective(const PairTable& t, const std::vector<Complex>& z) {
  double total = 0.0;
  for (size_t e = 0; e < t.elements.size(); ++e) {
    Complex lsum = 0.0;
    for (auto [i, j] : t.left[e]) lsum += z[i] * std::conj(z[j]);
    if (static_cast<int>(e) == t.identity_index) lsum -= 1.0;
    total += std::norm(lsum);
    Complex rsum = 0.0;
    for (auto [i, j] : t.right[e]) rsum += std::conj(z[i]) * z[j];
    if (static_cast<int>(e) == t.identity_index) rsum -= 1.0;
    total += std::norm(rsum);
  }
  return total;
}

}  // namespace

ScalarSearchResult scalar_solution_search(const GeneratingSet& graph,
                                          int restarts, unsigned seed,
                                          const std::vector<int>& tie_classes,
                                          double tol) {
  if (tol <= 0) tol = default_tolerance();
  ScalarSearchResult res;
  auto quad = quadrangularity_check(graph);
  if (!quad.holds) {
    res.quadrangular = false;
    res.best_residual = 1.0;
    return res;
  }
  const auto gens = symmetric_closure(graph);
  const int n = static_cast<int>(gens.size());
  std::vector<int> cls(n);
  int nfree = n;
  if (!tie_classes.empty()) {
    if (static_cast<int>(tie_classes.size()) != n)
      throw std::invalid_argument("tie class vector has wrong length");
    cls = tie_classes;
    nfree = *std::max_element(cls.begin(), cls.end()) + 1;
  } else {
    for (int i = 0; i < n; ++i) cls[i] = i;
  }
  PairTable table = build_pair_table(graph.ext, gens);

  auto expand = [&](const std::vector<double>& x) {
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i)
      z[i] = Complex(x[2 * cls[i]], x[2 * cls[i] + 1]);
    return z;
  };
  auto objective = [&](const std::vector<double>& x) {
    return scalar_objective(table, expand(x));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  res.best_residual = std::numeric_limits<double>::infinity();

  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x(2 * nfree);
    for (auto& v : x) v = uni(rng);
    // Gradient descent with numerical gradients and backtracking line search.
    double f = objective(x);
    const double eps = 1e-7;
    for (int iter = 0; iter < 4000; ++iter) {
      std::vector<double> grad(x.size());
      double gnorm2 = 0.0;
      for (size_t i = 0; i < x.size(); ++i) {
        std::vector<double> xp = x, xm = x;
        xp[i] += eps;
        xm[i] -= eps;
        grad[i] = (objective(xp) - objective(xm)) / (2 * eps);
        gnorm2 += grad[i] * grad[i];
      }
      if (gnorm2 < 1e-26) break;
      double step = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> xn = x;
        for (size_t i = 0; i < x.size(); ++i) xn[i] -= step * grad[i];
        double fn = objective(xn);
        if (fn < f - 1e-4 * step * gnorm2) {
          x = xn;
          f = fn;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved || f < 1e-26) break;
    }
    std::vector<Complex> z = expand(x);
    double resid = scalar_residual(table, z);
    res.best_residual = std::min(res.best_residual, resid);
    if (resid < tol) {
      // gauge fix: rotate so the largest-modulus scalar is real positive
      int imax = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(z[i]) > std::abs(z[imax])) imax = i;
      Complex phase = std::abs(z[imax]) > 0 ? std::abs(z[imax]) / z[imax]
                                            : Complex(1, 0);
      for (auto& v : z) v *= phase;
      bool dup = false;
      for (const auto& sol : res.solutions) {
        double dist = 0;
        for (int i = 0; i < n; ++i) dist += std::abs(sol[i] - z[i]);
        if (dist < 1e-6) { dup = true; break; }
      }
      if (!dup) res.solutions.push_back(z);
    }
  }
  return res;
}

GeneratingSet nogo_generating_set(int d) {
  GeneratingSet gs;
  gs.ext = ExtensionData::index2(d, imat_neg(imat_identity(d)), IVec(d, 0),
                                 "Z^" + std::to_string(d) + " x| Z2 (-I)");
  for (int i = 0; i < d; ++i) {
    IVec e(d, 0);
    e[i] = 1;
    gs.plus_gens.push_back(GroupElement{e, 0});
    gs.plus_gens.push_back(GroupElement{e, 1});
    gs.plus_gens.push_back(GroupElement{ivec_neg(e), 1});
  }
  return gs;
}

NogoCertificate isotropic_scalar_nogo_certificate(int d, int samples,
                                                  int search_restarts,
                                                  unsigned seed) {
  if (d < 2)
    throw std::invalid_argument("the no-go certificate applies to d >= 2");
  NogoCertificate cert;
  cert.dim = d;
  cert.samples = samples;
  cert.obstruction =
      "isotropy + unitarity force |z+|^2 + |zc|^2 + |z-|^2 + |zc|^2 = 0, "
      "impossible for a normalized walk";
  GeneratingSet gs = nogo_generating_set(d);
  const auto gens = symmetric_closure(gs);
  const int n = static_cast<int>(gens.size());
  // isotropy classes: kernel +, kernel -, reflections (all gc share one z)
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) {
    if (gens[i].q == 1)
      cls[i] = 2;
    else {
      bool plus = false;
      for (long long x : gens[i].n) plus |= (x > 0);
      cls[i] = plus ? 0 : 1;
    }
  }
  PairTable table = build_pair_table(gs.ext, gens);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  cert.min_residual = std::numeric_limits<double>::infinity();
  cert.min_bound = std::numeric_limits<double>::infinity();
  for (int t = 0; t < samples; ++t) {
    Complex zp(uni(rng), uni(rng)), zm(uni(rng), uni(rng)),
        zc(uni(rng), uni(rng));
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) z[i] = (cls[i] == 0 ? zp : cls[i] == 1 ? zm : zc);
    double resid = scalar_residual(table, z);
    double bound = std::norm(zp) + 2 * std::norm(zc) + std::norm(zm);
    double norm_gap = std::abs(d * bound - 1.0);  // the g = e constraint
    cert.min_residual = std::min(cert.min_residual, resid);
    cert.min_bound = std::min(cert.min_bound, std::max(bound, norm_gap));
  }
  ScalarSearchResult search =
      scalar_solution_search(gs, search_restarts, seed + 1, cls);
  cert.search_best = search.best_residual;
  // The analytic floor is 1/(d+1); 0.05 leaves ample numerical margin.
  cert.holds = cert.min_residual > 0.05 && cert.search_best > 0.05 &&
               search.solutions.empty();
  return cert;
}

}  // namespace cw
