#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "cayleywalk/catalog.hpp"
#include "cayleywalk/cayley.hpp"
#include "doctest.h"

using namespace cw;

namespace {

GeneratingSet plain_z_pm1() {
  GeneratingSet gs;
  gs.ext = ExtensionData::trivial_lattice(1);
  gs.plus_gens = {{{1}, 0}};
  return gs;
}

bool same_span(const std::vector<IVec>& a, const std::vector<IVec>& b, int d) {
  // each vector of a solvable in b and vice versa
  auto solvable_in = [&](const std::vector<IVec>& vecs, const IVec& target) {
    IMat m(d, IVec(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
      for (int i = 0; i < d; ++i) m[i][j] = vecs[j][i];
    return solve_integer(m, target).has_value();
  };
  for (const auto& v : a)
    if (!solvable_in(b, v)) return false;
  for (const auto& v : b)
    if (!solvable_in(a, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("symmetric closure adds inverses once") {
  auto gs = plain_z_pm1();
  auto s = symmetric_closure(gs);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == GroupElement{{1}, 0});
  CHECK(s[1] == GroupElement{{-1}, 0});

  // self-inverse coset generators are not duplicated
  auto dinf = extension_scalar_graph("Dinf");
  auto sd = symmetric_closure(dinf);
  CHECK(sd.size() == 4);
  std::sort(sd.begin(), sd.end());
  CHECK(std::adjacent_find(sd.begin(), sd.end()) == sd.end());
}

TEST_CASE("quadrangularity fails on the line and passes on the paired sets") {
  CHECK_FALSE(quadrangularity_check(plain_z_pm1()).holds);
  CHECK_FALSE(quadrangularity_check(plain_z_pm1()).violations.empty());

  for (const char* name : {"J1", "J2", "J3", "K1", "K2", "K3"}) {
    INFO(name);
    CHECK(quadrangularity_check(extension_scalar_graph(name)).holds);
  }
  CHECK(quadrangularity_check(extension_scalar_graph("Dinf")).holds);
  CHECK(quadrangularity_check(dirac_presentation_graph(2)).holds);
  CHECK(quadrangularity_check(dirac_presentation_graph(3)).holds);
}

TEST_CASE("coarse-grained generators on the infinite dihedral group") {
  auto gs = extension_scalar_graph("Dinf");
  auto recs = coarse_grained_generators(gs);
  // h = (1, e): q = e keeps +1, q = c flips to phi(1) = -1
  bool plus_seen = false, minus_seen = false;
  for (const auto& r : recs) {
    if (r.h == GroupElement{{1}, 0}) {
      if (r.q == 0) {
        CHECK(r.n_out == IVec{1});
        plus_seen = true;
      } else {
        CHECK(r.n_out == IVec{-1});
        minus_seen = true;
      }
    }
  }
  CHECK(plus_seen);
  CHECK(minus_seen);
}

TEST_CASE("coarse-grained kernel set generates the kernel") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& ext : enumerate_index2_extensions(d)) {
      INFO(ext.name);
      GeneratingSet gs = extension_scalar_graph(ext.name);
      auto kernel_vecs = coarse_grained_kernel_set(gs);
      // the walk's kernel subgroup: lattice vectors of the kernel
      // generators together with their images under every phi_q
      std::vector<IVec> reach;
      for (const auto& g : symmetric_closure(gs))
        for (int q = 0; q < ext.quotient.order; ++q)
          reach.push_back(imat_apply(gs.ext.phi[q], g.n));
      CHECK(same_span(kernel_vecs, reach, d));
      if (d <= 2)  // square-lattice generating sets span all of Z^d
        CHECK(generates_full_lattice(kernel_vecs, d));
    }
  }
}

TEST_CASE("coarse-grained generators stay in the kernel and merge cleanly") {
  for (const char* name : {"J1", "J2", "J3", "K1", "K2", "K3"}) {
    auto gs = extension_scalar_graph(name);
    auto recs = coarse_grained_generators(gs);
    CHECK(recs.size() ==
          symmetric_closure(gs).size() * gs.ext.quotient.order);
    // in index 2, (n_out, q, q') never collides for distinct h
    for (size_t i = 0; i < recs.size(); ++i)
      for (size_t j = i + 1; j < recs.size(); ++j) {
        bool same_slot = recs[i].n_out == recs[j].n_out &&
                         recs[i].q == recs[j].q &&
                         recs[i].q_prime == recs[j].q_prime;
        CHECK_FALSE(same_slot);
      }
  }
}

TEST_CASE("generator order is preserved") {
  auto gs = extension_scalar_graph("J2");
  auto s = symmetric_closure(gs);
  REQUIRE(s.size() == gs.plus_gens.size());  // already symmetric
  for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == gs.plus_gens[i]);
}
