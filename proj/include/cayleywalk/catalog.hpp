#pragma once
// Exact constructors for the concrete walk families: the one-parameter
// square-lattice coin walks, the BCC family, scalar walks on the index-2
// extensions, the infinite-dihedral scalar family, and the massive
// (Dirac-type) walks with their scalar parents.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cayleywalk/coarse_grain.hpp"
#include "cayleywalk/walk.hpp"

namespace cw {

// 2x2-coin walk on the square lattice, one parameter alpha in (0,1).
// Canonical gauge sum_h A_h = I; optional left unitary applied to all
// matrices.
QuantumWalk square2d_family(double alpha,
                            const std::optional<CMat>& left_unitary = {});

// 2x2-coin walk on the BCC lattice; requires alpha_i > 0,
// alpha1*alpha2 = alpha3*alpha4 and sum alpha_i^2 = 1 (both to 1e-12).
QuantumWalk bcc3d_family(const std::array<double, 4>& alpha, double theta,
                         const std::optional<CMat>& left_unitary = {});

// Scalar walk on the named index-2 extension with generating set
// S' = {g, gc | g in S}, S the square (J*) or BCC (K*) generators.
// Scalars are keyed positionally: first the kernel generators in listing
// order (h1, -h1, h2, -h2, ...), then the reflections in the same order.
QuantumWalk scalar_on_extension(const std::string& which,
                                const std::vector<Complex>& scalars);

// The generating set used by scalar_on_extension (for searches/CLI).
GeneratingSet extension_scalar_graph(const std::string& which);

// Scalar walk on the infinite dihedral group with generators
// {(1,e),(-1,e),(1,c),(-1,c)}; both reflections carry z_c.
QuantumWalk dinfty_scalar(Complex z_plus, Complex z_minus, Complex z_c);

// One-parameter unitary family of the dihedral scalar walk:
// z+ = a, z- = -(1-a), zc = i sqrt(a(1-a)), a in [0,1].
QuantumWalk dinfty_scalar_unitary(double a);

// Massive walk with coin dimension 4 (d = 2,3) built from the massless
// square/BCC families: A_h = diag(n A_h, n B_h) with B_h = A_{-h}^+ plus a
// mass loop antidiag(i m I, i m I), n = sqrt(1 - m^2).
// For d = 1 this returns the 2x2-coin coarse-graining of the dihedral family
// at its mass-m point (a = (1+n)/2).
QuantumWalk dirac_walk(int d, double m);

// Scalar walk on Z^d x| (Z2 x Z2) whose coarse-graining has, at every
// momentum k, exactly the eigenphase spectrum of dirac_walk(d, m)
// (each +-omega branch twice). d in {2,3}, m in [0,1).
QuantumWalk dirac_scalar_parent(int d, double m);

// The Klein-four presentation graph underlying the massive construction:
// Z^d x| (Z2 x Z2) with S' = {h, hc1 | h in S_d} plus {c2}, where phi_1,
// phi_2 act as (sigma_z, -sigma_z) for d = 2 and as (diag(1,-1,-1),
// diag(-1,-1,1)) for d = 3.
GeneratingSet dirac_presentation_graph(int d);

// Catalog registry for the CLI: name -> parameter documentation.
std::map<std::string, std::string> catalog_names();
// Builds a catalog walk from by-name parameters (missing ones default).
QuantumWalk catalog_build(const std::string& name,
                          const std::map<std::string, double>& params,
                          const std::vector<Complex>& scalars = {});

}  // namespace cw
