#pragma once
// Exact integer arithmetic for finite-quotient-by-Z^d group extensions:
// composition, inverses, 2-cocycle validation/normalization, pseudo-congruence
// and enumeration of index-2 extensions for d = 1, 2, 3.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cw {

using IVec = std::vector<long long>;          // lattice vector in Z^d
using IMat = std::vector<std::vector<long long>>;  // row-major integer matrix

// --- small exact integer-matrix helpers -----------------------------------
IMat imat_identity(int d);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& m, const IVec& v);
IMat imat_add(const IMat& a, const IMat& b);
IMat imat_neg(const IMat& a);
long long imat_det(const IMat& m);            // Bareiss, exact
bool imat_equal(const IMat& a, const IMat& b);
IMat imat_inverse_unimodular(const IMat& m);  // requires det = +-1

IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& a);
bool ivec_is_zero(const IVec& v);
std::string ivec_str(const IVec& v);

// Smith normal form: returns D (diagonal, divisibility chain) together with
// unimodular U, V such that U * A * V = D.  A may be rectangular.
struct SmithForm {
  IMat d, u, v;         // u: rows x rows, v: cols x cols
  std::vector<long long> divisors;  // nonneg diagonal of d, length min(r,c)
};
SmithForm smith_normal_form(const IMat& a);

// True iff the integer span of `vectors` is all of Z^d.
bool lattice_spans(const std::vector<IVec>& vectors, int d);

// Solve M x = b over the integers (M: d x k). Empty optional if unsolvable.
std::optional<IVec> solve_integer(const IMat& m, const IVec& b);

// --- finite quotient --------------------------------------------------------
struct FiniteQuotient {
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  std::vector<int> element_orders;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }

  // Non-empty list of violated structural constraints (empty = valid).
  std::vector<std::string> validate() const;

  static FiniteQuotient trivial();
  static FiniteQuotient cyclic(int n);
  static FiniteQuotient klein4();  // Z2 x Z2, indices compose by XOR
  // Derives inverse/element_orders from a bare composition table.
  static FiniteQuotient from_table(std::vector<std::vector<int>> table);
};

// --- extension data ---------------------------------------------------------
struct ExtensionData {
  int dim = 1;
  FiniteQuotient quotient;
  std::vector<IMat> phi;                 // one unimodular matrix per q
  std::vector<std::vector<IVec>> cocycle;  // f[q1][q2] in Z^d
  std::string name;                       // e.g. "J2"; informational
  std::string presentation;               // generator/relator text

  bool is_trivial_quotient() const { return quotient.order == 1; }
  bool is_semidirect() const;             // f == 0 everywhere
  static ExtensionData trivial_lattice(int d);  // Q = {e}, plain Z^d
  // Index-2 helper: Z^d extension with given involution phi and c^2 value.
  static ExtensionData index2(int d, const IMat& phi_c, const IVec& c_squared,
                              std::string name = "");
};

struct GroupElement {
  IVec n;
  int q = 0;
  bool operator==(const GroupElement& o) const { return q == o.q && n == o.n; }
  bool operator<(const GroupElement& o) const {
    if (q != o.q) return q < o.q;
    return n < o.n;
  }
};
std::string element_str(const GroupElement& g);

GroupElement identity_element(const ExtensionData& ext);
GroupElement compose(const ExtensionData& ext, const GroupElement& a,
                     const GroupElement& b);
GroupElement inverse(const ExtensionData& ext, const GroupElement& a);

// Structural validation report; empty means valid.
std::vector<std::string> validate_extension(const ExtensionData& ext);

// Change of coset representatives c_q -> n_q c_q (pseudo-congruence move).
ExtensionData coset_change(const ExtensionData& ext,
                           const std::vector<IVec>& n_q);

// Returns pseudo-congruent data with f(e,.) = f(.,e) = 0; idempotent.
ExtensionData normalize_cocycle(const ExtensionData& ext);

// Index-2 pseudo-congruence decision. Optional `conj` conjugates ext1's
// automorphism (and c^2) into ext2's frame; defaults to the identity.
struct CongruenceResult {
  bool congruent = false;
  std::optional<IVec> witness;  // n with c2^2 - P c1^2 = (I + phi) n
};
CongruenceResult pseudo_congruent_index2(const ExtensionData& ext1,
                                         const ExtensionData& ext2,
                                         const IMat* conj = nullptr);

// Canonical representatives of all non-Abelian index-2 extensions of Z^d,
// complete and pairwise non-pseudo-congruent, for d in {1,2,3}.
std::vector<ExtensionData> enumerate_index2_extensions(int d);

// Hard-coded conjugacy-class representatives of the order-2 subgroups of
// GL(d,Z), d <= 3 (the classes behind the enumeration above).
std::vector<std::pair<std::string, IMat>> order2_automorphism_classes(int d);

}  // namespace cw
