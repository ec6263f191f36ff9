#include "cayleywalk/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "cayleywalk/coarse_grain.hpp"

namespace cw {

long long TorusPatch::sites() const {
  long long n = qsize;
  for (int i = 0; i < d; ++i) n *= L;
  return n;
}
long long TorusPatch::amplitudes() const { return sites() * s; }

long long WalkState::index(const std::vector<int>& site, int q,
                           int coin) const {
  long long idx = 0;
  for (int i = 0; i < patch.d; ++i) {
    int c = ((site[i] % patch.L) + patch.L) % patch.L;
    idx = idx * patch.L + c;
  }
  return (idx * patch.qsize + q) * patch.s + coin;
}

double WalkState::norm() const {
  double n2 = 0;
  for (const Complex& a : amp) n2 += std::norm(a);
  return std::sqrt(n2);
}

namespace {

std::vector<Complex> default_coin(int s, const std::vector<Complex>& coin) {
  if (coin.empty()) {
    std::vector<Complex> c(s, 0.0);
    c[0] = 1.0;
    return c;
  }
  if (static_cast<int>(coin.size()) != s)
    throw std::invalid_argument("coin vector has wrong dimension");
  return coin;
}

}  // namespace

WalkState delta_state(const TorusPatch& patch, const std::vector<int>& site,
                      int q, const std::vector<Complex>& coin) {
  WalkState st;
  st.patch = patch;
  st.amp.assign(patch.amplitudes(), 0.0);
  std::vector<int> pos = site.empty() ? std::vector<int>(patch.d, 0) : site;
  auto c = default_coin(patch.s, coin);
  for (int i = 0; i < patch.s; ++i) st.amp[st.index(pos, q, i)] = c[i];
  return st;
}

WalkState gaussian_state(const TorusPatch& patch, const std::vector<double>& k0,
                         double width, const std::vector<Complex>& coin) {
  if (!(width > 0.0))
    throw std::invalid_argument("gaussian_state: width must be positive");
  if (static_cast<int>(k0.size()) != patch.d)
    throw std::invalid_argument("gaussian_state: k0 has wrong dimension");
  WalkState st;
  st.patch = patch;
  st.amp.assign(patch.amplitudes(), 0.0);
  auto c = default_coin(patch.s, coin);

  std::vector<int> site(patch.d, 0);
  const int half = patch.L / 2;
  while (true) {
    double r2 = 0, phase = 0;
    for (int i = 0; i < patch.d; ++i) {
      // centered displacement on the torus
      int x = site[i] <= half ? site[i] : site[i] - patch.L;
      r2 += static_cast<double>(x) * x;
      phase += k0[i] * x;
    }
    Complex a = std::exp(Complex(-r2 / (4.0 * width * width), phase));
    for (int i = 0; i < patch.s; ++i) st.amp[st.index(site, 0, i)] = a * c[i];
    int axis = patch.d - 1;
    while (axis >= 0 && ++site[axis] == patch.L) site[axis--] = 0;
    if (axis < 0) break;
  }
  double n = st.norm();
  for (Complex& a : st.amp) a /= n;
  return st;
}

WalkState step(const QuantumWalk& w, const WalkState& state) {
  const TorusPatch& p = state.patch;
  const int d = w.ext.dim;
  if (p.d != d || p.qsize != w.ext.quotient.order || p.s != w.coin_dim)
    throw std::invalid_argument("step: patch does not match the walk");

  // compose((n, q), h^-1) = (n + off, q') with the offset constant in n.
  struct Move {
    int q_to;
    IVec off;
  };
  const int Q = p.qsize;
  std::vector<std::vector<Move>> moves(w.gens.size());
  for (size_t gi = 0; gi < w.gens.size(); ++gi) {
    GroupElement hinv = inverse(w.ext, w.gens[gi]);
    moves[gi].resize(Q);
    for (int q = 0; q < Q; ++q) {
      GroupElement from{IVec(d, 0), q};
      GroupElement to = compose(w.ext, from, hinv);
      moves[gi][q] = {to.q, to.n};
    }
  }

  WalkState out;
  out.patch = p;
  out.amp.assign(p.amplitudes(), 0.0);

  std::vector<int> site(d, 0), target(d, 0);
  while (true) {
    for (int q = 0; q < Q; ++q) {
      long long src = state.index(site, q, 0);
      bool any = false;
      for (int ci = 0; ci < p.s && !any; ++ci)
        any = state.amp[src + ci] != Complex(0.0);
      if (!any) continue;
      for (size_t gi = 0; gi < w.gens.size(); ++gi) {
        const Move& mv = moves[gi][q];
        for (int i = 0; i < d; ++i)
          target[i] = static_cast<int>(
              ((site[i] + mv.off[i]) % p.L + p.L) % p.L);
        long long dst = out.index(target, mv.q_to, 0);
        const CMat& A = w.matrices[gi];
        for (int r = 0; r < p.s; ++r) {
          Complex acc = 0.0;
          for (int c = 0; c < p.s; ++c) acc += A(r, c) * state.amp[src + c];
          out.amp[dst + r] += acc;
        }
      }
    }
    int axis = d - 1;
    while (axis >= 0 && ++site[axis] == p.L) site[axis--] = 0;
    if (axis < 0) break;
  }
  return out;
}

WalkState evolve(const QuantumWalk& w, WalkState state, int steps) {
  for (int t = 0; t < steps; ++t) state = step(w, state);
  return state;
}

std::vector<double> probability_distribution(const WalkState& state) {
  const TorusPatch& p = state.patch;
  std::vector<double> prob(p.sites(), 0.0);
  for (long long i = 0; i < p.sites(); ++i)
    for (int c = 0; c < p.s; ++c) prob[i] += std::norm(state.amp[i * p.s + c]);
  return prob;
}

double compare_representations(const QuantumWalk& scalar_walk, int steps,
                               int L) {
  CoarseGrainedWalk cg = coarse_grain(scalar_walk);
  const int d = scalar_walk.ext.dim;
  const int Q = scalar_walk.ext.quotient.order;

  TorusPatch sp{L, d, Q, 1};
  TorusPatch cp{L, d, 1, Q};
  WalkState s = evolve(scalar_walk, delta_state(sp), steps);
  WalkState c = evolve(cg.base, delta_state(cp), steps);

  // |n c_q> in the scalar walk corresponds to coin q at site n in the
  // coarse-grained walk; the shared flat index makes this a direct compare.
  double max_diff = 0.0;
  std::vector<int> site(d, 0);
  while (true) {
    for (int q = 0; q < Q; ++q) {
      long long flat = intertwined_index(L, d, site, q, Q);
      max_diff = std::max(max_diff,
                          std::abs(s.amp[flat] - c.amp[flat]));
    }
    int axis = d - 1;
    while (axis >= 0 && ++site[axis] == L) site[axis--] = 0;
    if (axis < 0) break;
  }
  return max_diff;
}

}  // namespace cw
