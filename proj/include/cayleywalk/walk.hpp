#pragma once
// Quantum walks on Cayley graphs: unitarity residuals, isotropy checks and a
// numerical scalar-solution search with the isotropic no-go certificate.

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "cayleywalk/cayley.hpp"
#include "cayleywalk/group.hpp"

namespace cw {

using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Default verification tolerance; overridable via CAYLEYWALK_TOLERANCE.
double default_tolerance();

struct QuantumWalk {
  ExtensionData ext;                 // trivial quotient for plain Z^d walks
  std::vector<GroupElement> gens;    // full symmetric generating list
  bool includes_identity = false;    // true iff the identity loop is listed
  int coin_dim = 1;
  std::vector<CMat> matrices;        // one per generator, aligned with gens
  std::vector<std::string> gen_labels;  // optional symbol names (provenance)
  double tolerance = 0.0;            // 0 means "use default_tolerance()"

  double tol() const { return tolerance > 0 ? tolerance : default_tolerance(); }
};

struct UnitarityConstraint {
  GroupElement g;
  // Frobenius norms normalized by sqrt(s), so a uniform defect c*I on the
  // identity constraint reads as |c| independent of the coin dimension.
  double left_norm = 0.0;   // sum_{h h'^-1 = g} A_h A_h'^+ - delta I
  double right_norm = 0.0;  // sum_{h^-1 h' = g} A_h^+ A_h' - delta I
};
struct UnitarityReport {
  double residual = 0.0;  // max over constraints and orderings
  std::vector<UnitarityConstraint> breakdown;
};
UnitarityReport unitarity_residual(const QuantumWalk& w);
bool verify_unitarity(const QuantumWalk& w);

struct IsotropyRep {
  // each element: a permutation of generator indices plus its coin unitary
  std::vector<std::vector<int>> perms;
  std::vector<CMat> unitaries;
};
struct IsotropyResult {
  bool isotropic = false;
  double max_deviation = 0.0;
  bool transitive = false;
};
IsotropyResult isotropy_check(const QuantumWalk& w, const IsotropyRep& rep);

struct ScalarSearchResult {
  bool quadrangular = true;  // false => structurally infeasible
  double best_residual = 0.0;
  // solutions below tolerance, deduplicated up to global phase
  std::vector<std::vector<Complex>> solutions;
};
// Numerical search for unit-residual-zero scalar (s=1) assignments on the
// graph. `tie_classes`, if non-empty, assigns one shared scalar per class
// (generator i uses scalar tie_classes[i]); used for isotropy-constrained
// searches. Deterministic for fixed seed.
ScalarSearchResult scalar_solution_search(const GeneratingSet& graph,
                                          int restarts, unsigned seed,
                                          const std::vector<int>& tie_classes =
                                              {},
                                          double tol = 0.0);

struct NogoCertificate {
  int dim = 0;
  std::string obstruction;      // the symbolic impossibility
  int samples = 0;
  double min_residual = 0.0;    // over random isotropic assignments
  double min_bound = 0.0;       // min of the symbolic lower-bound quantity
  double search_best = 0.0;     // best residual found by constrained search
  bool holds = false;
};
// Executable form of the no-go for isotropic scalar walks in d >= 2: samples
// random isotropic scalar assignments on Z^d x| Z2 (phi = -I) with the
// S = {g, gc} generating set and confirms the residual stays bounded away
// from zero; also runs the tied-scalar search.
NogoCertificate isotropic_scalar_nogo_certificate(int d, int samples = 10000,
                                                  int search_restarts = 100,
                                                  unsigned seed = 1);

// The generating set used by the certificate (exposed for tests/CLI).
GeneratingSet nogo_generating_set(int d);

}  // namespace cw
