#include "cayleywalk/momentum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kPi = 3.14159265358979323846;

long long gcdll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) { a %= b; std::swap(a, b); }
  return a;
}
}  // namespace

double HalfSpace::bound() const {
  double n2 = 0;
  for (long long x : normal_num) n2 += double(x) * double(x);
  return kPi * n2 / (double(denom) * double(denom));
}

double HalfSpace::eval(const std::vector<double>& k) const {
  double s = 0;
  for (size_t i = 0; i < k.size(); ++i) s += k[i] * double(normal_num[i]);
  return s / double(denom);
}

bool BrillouinZone::contains(const std::vector<double>& k,
                             double slack) const {
  for (const auto& h : halfspaces)
    if (std::abs(h.eval(k)) > h.bound() + slack) return false;
  return true;
}

BrillouinZone brillouin_zone(const std::vector<IVec>& plus_gens, int d) {
  BrillouinZone bz;
  bz.dim = d;
  std::vector<IVec> gens;
  for (const auto& g : plus_gens)
    if (!ivec_is_zero(g)) gens.push_back(g);
  // all d-subsets with nonzero determinant
  const int n = static_cast<int>(gens.size());
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      IMat m(d, IVec(d));
      for (int i = 0; i < d; ++i) m[i] = gens[idx[i]];  // rows are h_m
      long long det = imat_det(m);
      if (det == 0) return;
      // dual l: solve M htilde_l = e_l; htilde_l = adj(M) e_l / det
      // adjugate via cofactors
      for (int l = 0; l < d; ++l) {
        IVec num(d, 0);
        for (int r = 0; r < d; ++r) {
          // (M^-1)_{r l} = cof_{l r} / det
          IMat minor;
          for (int a = 0; a < d; ++a) {
            if (a == l) continue;
            IVec row;
            for (int b = 0; b < d; ++b)
              if (b != r) row.push_back(m[a][b]);
            minor.push_back(row);
          }
          long long cof = ((l + r) % 2 == 0 ? 1 : -1) * imat_det(minor);
          num[r] = cof;
        }
        long long den = det;
        long long g = gcdll(den, std::accumulate(
                                     num.begin(), num.end(), 0LL,
                                     [](long long a, long long b) {
                                       return gcdll(a, b);
                                     }));
        if (g > 1) {
          for (auto& x : num) x /= g;
          den /= g;
        }
        if (den < 0) {
          den = -den;
          for (auto& x : num) x = -x;
        }
        // canonical sign: first nonzero numerator positive
        for (long long x : num) {
          if (x == 0) continue;
          if (x < 0)
            for (auto& y : num) y = -y;
          break;
        }
        HalfSpace hs{num, den};
        bool dup = false;
        for (const auto& other : bz.halfspaces)
          if (other.normal_num == hs.normal_num && other.denom == hs.denom) {
            dup = true;
            break;
          }
        if (!dup) bz.halfspaces.push_back(hs);
      }
      return;
    }
    for (int i = start; i <= n - (d - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (bz.halfspaces.empty())
    throw std::invalid_argument("generators do not span R^d");
  // bounding box from polytope vertices (intersections of d active planes,
  // each with either sign)
  bz.box.assign(d, 0.0);
  const int m = static_cast<int>(bz.halfspaces.size());
  std::vector<int> pick(d);
  std::function<void(int, int)> vrec = [&](int start, int depth) {
    if (depth == d) {
      for (int signs = 0; signs < (1 << d); ++signs) {
        Eigen::MatrixXd a(d, d);
        Eigen::VectorXd b(d);
        for (int i = 0; i < d; ++i) {
          const auto& h = bz.halfspaces[pick[i]];
          for (int j = 0; j < d; ++j)
            a(i, j) = double(h.normal_num[j]) / double(h.denom);
          b(i) = ((signs >> i) & 1 ? 1.0 : -1.0) * h.bound();
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (!lu.isInvertible()) continue;
        Eigen::VectorXd x = lu.solve(b);
        std::vector<double> k(d);
        for (int i = 0; i < d; ++i) k[i] = x(i);
        if (!bz.contains(k, 1e-9)) continue;
        for (int i = 0; i < d; ++i)
          bz.box[i] = std::max(bz.box[i], std::abs(k[i]));
      }
      return;
    }
    for (int i = start; i <= m - (d - depth); ++i) {
      pick[depth] = i;
      vrec(i + 1, depth + 1);
    }
  };
  vrec(0, 0);
  return bz;
}

CMat walk_at_k(const QuantumWalk& w, const std::vector<double>& k) {
  if (!w.ext.is_trivial_quotient())
    throw std::invalid_argument("walk_at_k needs a walk on Z^d");
  CMat out = CMat::Zero(w.coin_dim, w.coin_dim);
  for (size_t i = 0; i < w.gens.size(); ++i) {
    double phase = 0;
    for (int j = 0; j < w.ext.dim; ++j) phase += k[j] * double(w.gens[i].n[j]);
    out += std::exp(Complex(0, phase)) * w.matrices[i];
  }
  return out;
}

std::vector<double> eigenphases(const CMat& u) {
  Eigen::ComplexEigenSolver<CMat> es(u);
  std::vector<double> ph;
  for (int i = 0; i < u.rows(); ++i) {
    double a = std::arg(es.eigenvalues()(i));
    if (a <= -kPi) a += 2 * kPi;
    ph.push_back(a);
  }
  std::sort(ph.begin(), ph.end());
  return ph;
}

DispersionGrid dispersion(const QuantumWalk& w, int grid_points) {
  DispersionGrid grid;
  std::vector<IVec> plus;
  for (const auto& g : w.gens) plus.push_back(g.n);
  grid.zone = brillouin_zone(plus, w.ext.dim);
  const int d = w.ext.dim;
  std::vector<int> counter(d, 0);
  for (;;) {
    std::vector<double> k(d);
    for (int i = 0; i < d; ++i) {
      double b = grid.zone.box[i];
      k[i] = grid_points == 1
                 ? 0.0
                 : -b + 2.0 * b * double(counter[i]) / double(grid_points - 1);
    }
    if (grid.zone.contains(k)) {
      DispersionPoint p;
      p.k = k;
      p.omegas = eigenphases(walk_at_k(w, k));
      grid.points.push_back(std::move(p));
    }
    int axis = d - 1;
    while (axis >= 0 && ++counter[axis] == grid_points) counter[axis--] = 0;
    if (axis < 0) break;
  }
  return grid;
}

namespace {

// Eigenphase of the branch that maximally overlaps `ref` at momentum k.
double tracked_phase(const QuantumWalk& w, const std::vector<double>& k,
                     const Eigen::VectorXcd& ref) {
  Eigen::ComplexEigenSolver<CMat> es(walk_at_k(w, k));
  int best = 0;
  double best_ov = -1;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ov = std::abs(ref.dot(es.eigenvectors().col(i)));
    if (ov > best_ov) { best_ov = ov; best = i; }
  }
  return std::arg(es.eigenvalues()(best));
}

}  // namespace

VelocityDiffusion group_velocity_and_diffusion(const QuantumWalk& w,
                                               const std::vector<double>& k0,
                                               int branch, double step) {
  const int d = w.ext.dim;
  Eigen::ComplexEigenSolver<CMat> es(walk_at_k(w, k0));
  // order branches by phase to give `branch` a stable meaning
  std::vector<int> order(es.eigenvalues().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::arg(es.eigenvalues()(a)) < std::arg(es.eigenvalues()(b));
  });
  if (branch < 0 || branch >= static_cast<int>(order.size()))
    throw std::invalid_argument("branch index out of range");
  const int bi = order[branch];
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (i == bi) continue;
    if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(bi)) < 1e-6)
      throw std::invalid_argument(
          "band crossing at k0: derivative branch is degenerate");
  }
  Eigen::VectorXcd ref = es.eigenvectors().col(bi);
  const double w0 = std::arg(es.eigenvalues()(bi));
  auto at = [&](const std::vector<double>& k) {
    double ph = tracked_phase(w, k, ref);
    // unwrap relative to the base phase
    while (ph - w0 > kPi) ph -= 2 * kPi;
    while (ph - w0 < -kPi) ph += 2 * kPi;
    return ph;
  };
  VelocityDiffusion out;
  out.v.assign(d, 0.0);
  out.d.assign(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) {
    auto kp = k0, km = k0;
    kp[i] += step;
    km[i] -= step;
    double wp = at(kp), wm = at(km);
    out.v[i] = (wp - wm) / (2 * step);
    out.d[i][i] = (wp - 2 * w0 + wm) / (step * step);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto kpp = k0, kpm = k0, kmp = k0, kmm = k0;
      kpp[i] += step; kpp[j] += step;
      kpm[i] += step; kpm[j] -= step;
      kmp[i] -= step; kmp[j] += step;
      kmm[i] -= step; kmm[j] -= step;
      double v =
          (at(kpp) - at(kpm) - at(kmp) + at(kmm)) / (4 * step * step);
      out.d[i][j] = out.d[j][i] = v;
    }
  return out;
}

}  // namespace cw
