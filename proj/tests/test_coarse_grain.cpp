#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayleywalk/catalog.hpp"
#include "cayleywalk/coarse_grain.hpp"
#include "doctest.h"

using namespace cw;

namespace {

std::vector<Complex> ramp_scalars(int n) {
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) z[i] = Complex(0.1 * (i + 1), 0.01 * i);
  return z;
}

std::string pattern_for(const std::string& name, int n) {
  QuantumWalk w = scalar_on_extension(name, ramp_scalars(n));
  return provenance_pattern(coarse_grain(w), w.gen_labels);
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string cur; std::getline(in, cur);)
    if (cur == line) return true;
  return false;
}

}  // namespace

TEST_CASE("provenance pattern for the infinite dihedral walk") {
  std::string p = pattern_for("Dinf", 4);
  CHECK(has_line(p, "A_(1) = [[z_{h1}, z_{h1c}], [z_{h1^-1c}, z_{h1^-1}]]"));
  CHECK(has_line(p, "A_(-1) = [[z_{h1^-1}, z_{h1^-1c}], [z_{h1c}, z_{h1}]]"));
}

TEST_CASE("provenance patterns for the planar index-2 walks") {
  std::string j1 = pattern_for("J1", 8);
  CHECK(has_line(j1, "A_(1,0) = [[z_{h1}, z_{h1c}], [z_{h1^-1c}, z_{h1^-1}]]"));
  CHECK(has_line(j1, "A_(0,-1) = [[z_{h2^-1}, z_{h2^-1c}], [z_{h2c}, z_{h2}]]"));

  // J2 swaps the two axes on the reflected sheet: h1 pairs with h2.
  std::string j2 = pattern_for("J2", 8);
  CHECK(has_line(j2, "A_(1,0) = [[z_{h1}, z_{h1c}], [z_{h2c}, z_{h2}]]"));
  CHECK(has_line(j2, "A_(0,1) = [[z_{h2}, z_{h2c}], [z_{h1c}, z_{h1}]]"));
  CHECK(has_line(j2,
                 "A_(-1,0) = [[z_{h1^-1}, z_{h1^-1c}], [z_{h2^-1c}, z_{h2^-1}]]"));

  // J3 fixes the first axis, so A_(+-1,0) is symmetric in one symbol.
  std::string j3 = pattern_for("J3", 8);
  CHECK(has_line(j3, "A_(1,0) = [[z_{h1}, z_{h1c}], [z_{h1c}, z_{h1}]]"));
  CHECK(has_line(j3, "A_(0,1) = [[z_{h2}, z_{h2c}], [z_{h2^-1c}, z_{h2^-1}]]"));
}

TEST_CASE("provenance pattern for the body-centered K2 walk") {
  // K2's reflection pairs the body-diagonal generators (h1,h4) and (h2,h3).
  std::string p = pattern_for("K2", 16);
  CHECK(has_line(p, "A_(1,1,1) = [[z_{h1}, z_{h1c}], [z_{h4c}, z_{h4}]]"));
  CHECK(has_line(p, "A_(1,-1,-1) = [[z_{h4}, z_{h4c}], [z_{h1c}, z_{h1}]]"));
  CHECK(has_line(p, "A_(-1,-1,1) = [[z_{h2}, z_{h2c}], [z_{h3c}, z_{h3}]]"));
  CHECK(has_line(p, "A_(-1,1,-1) = [[z_{h3}, z_{h3c}], [z_{h2c}, z_{h2}]]"));
}

TEST_CASE("coarse-grained dihedral matrices carry the scalar values") {
  Complex zp(0.35, 0.1), zm(-0.2, 0.4), zc(0.15, -0.05);
  QuantumWalk w = dinfty_scalar(zp, zm, zc);
  CoarseGrainedWalk cg = coarse_grain(w);
  REQUIRE(cg.base.coin_dim == 2);
  REQUIRE(cg.base.gens.size() == 2);

  for (std::size_t i = 0; i < cg.base.gens.size(); ++i) {
    const CMat& A = cg.base.matrices[i];
    bool plus = cg.base.gens[i].n[0] == 1;
    Complex d0 = plus ? zp : zm;
    Complex d1 = plus ? zm : zp;
    CHECK(std::abs(A(0, 0) - d0) <= 1e-15);
    CHECK(std::abs(A(1, 1) - d1) <= 1e-15);
    CHECK(std::abs(A(0, 1) - zc) <= 1e-15);
    CHECK(std::abs(A(1, 0) - zc) <= 1e-15);
  }
}

TEST_CASE("every scalar lands exactly once and provenance is faithful") {
  for (const char* name : {"Dinf", "J1", "J2", "J3", "K1", "K2", "K3"}) {
    CAPTURE(name);
    int n = std::string(name)[0] == 'K' ? 16 : (std::string(name) == "Dinf" ? 4 : 8);
    QuantumWalk w = scalar_on_extension(name, ramp_scalars(n));
    CoarseGrainedWalk cg = coarse_grain(w);

    std::vector<int> uses(w.gens.size(), 0);
    for (const ProvenanceEntry& e : cg.provenance) {
      Complex entry = cg.base.matrices[e.cg_gen](e.row, e.col);
      CHECK(std::abs(entry - w.matrices[e.scalar_gen](0, 0)) == 0.0);
      uses[e.scalar_gen]++;
    }
    // each scalar generator shows up on both sheets, so exactly twice
    for (int c : uses) CHECK(c == 2);
  }
}

TEST_CASE("unitarity survives regrouping in both directions") {
  // exact solutions stay exact
  for (double a : {0.0, 0.3, 1.0 / std::sqrt(2.0), 0.9, 1.0}) {
    QuantumWalk w = dinfty_scalar_unitary(a);
    CoarseGrainedWalk cg = coarse_grain(w);
    CHECK(unitarity_residual(w).residual <= 1e-12);
    CHECK(unitarity_residual(cg.base).residual <= 1e-12);
  }

  // a defect of size eps stays of size eps: the regrouped residual is
  // squeezed between the scalar residual and coin_dim times it
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> weyl = {0.5, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, -0.5};
  for (int trial = 0; trial < 20; ++trial) {
    auto z = weyl;
    double eps = (trial < 10) ? 1e-3 : 1e-6;
    z[trial % 8] += eps * Complex(u(rng), u(rng));
    QuantumWalk w = scalar_on_extension("J2", z);
    CoarseGrainedWalk cg = coarse_grain(w);
    double rs = unitarity_residual(w).residual;
    double rc = unitarity_residual(cg.base).residual;
    CHECK(rc >= rs * (1.0 - 1e-9));
    CHECK(rc <= rs * cg.base.coin_dim * (1.0 + 1e-9));
  }
}

TEST_CASE("zero coset scalars give diagonal coin matrices") {
  std::vector<Complex> z(8, Complex(0.0, 0.0));
  z[0] = Complex(0.4, 0.1);   // z_{h1}
  z[1] = Complex(-0.3, 0.2);  // z_{h2}
  z[2] = Complex(0.25, 0.0);  // z_{h1^-1}
  z[3] = Complex(0.0, -0.5);  // z_{h2^-1}
  QuantumWalk w = scalar_on_extension("J1", z);
  CoarseGrainedWalk cg = coarse_grain(w);
  for (const CMat& A : cg.base.matrices) {
    CHECK(std::abs(A(0, 1)) == 0.0);
    CHECK(std::abs(A(1, 0)) == 0.0);
  }
}

TEST_CASE("regrouping rejects non-scalar and trivial-quotient input") {
  CHECK_THROWS(coarse_grain(square2d_family(0.5)));  // coin_dim 4
  QuantumWalk scalar1d = dinfty_scalar_unitary(0.5);
  CoarseGrainedWalk cg = coarse_grain(scalar1d);
  CHECK_THROWS(coarse_grain(cg.base));  // trivial quotient after regrouping
}

TEST_CASE("the intertwining site index is a bijection") {
  const int L = 3, d = 2, Q = 4;
  std::set<long long> seen;
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int q = 0; q < Q; ++q) {
        long long idx = intertwined_index(L, d, {x, y}, q, Q);
        CHECK(idx >= 0);
        CHECK(idx < (long long)L * L * Q);
        seen.insert(idx);
      }
  CHECK((int)seen.size() == L * L * Q);

  // sites wrap modulo L, matching the periodic patch
  CHECK(intertwined_index(L, d, {L, 1}, 2, Q) ==
        intertwined_index(L, d, {0, 1}, 2, Q));
  CHECK(intertwined_index(L, d, {-1, 0}, 1, Q) ==
        intertwined_index(L, d, {L - 1, 0}, 1, Q));
}
