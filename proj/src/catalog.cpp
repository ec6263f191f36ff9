#include "cayleywalk/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

namespace {

const Complex kI(0.0, 1.0);

CMat m2(Complex a, Complex b, Complex c, Complex d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

std::vector<IVec> square_gens() { return {{1, 0}, {0, 1}}; }
std::vector<IVec> bcc_gens() {
  return {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
}

QuantumWalk lattice_walk(int d, const std::vector<IVec>& plus,
                         std::vector<CMat> plus_mats,
                         std::vector<CMat> minus_mats,
                         const std::optional<CMat>& left_unitary) {
  QuantumWalk w;
  w.ext = ExtensionData::trivial_lattice(d);
  w.coin_dim = static_cast<int>(plus_mats.front().rows());
  for (size_t i = 0; i < plus.size(); ++i) {
    w.gens.push_back({plus[i], 0});
    w.matrices.push_back(plus_mats[i]);
    w.gens.push_back({ivec_neg(plus[i]), 0});
    w.matrices.push_back(minus_mats[i]);
  }
  if (left_unitary) {
    if (left_unitary->rows() != w.coin_dim || left_unitary->cols() != w.coin_dim)
      throw std::invalid_argument("left unitary has wrong dimension");
    for (auto& m : w.matrices) m = (*left_unitary) * m;
  }
  return w;
}

// Generator labels for a scalar walk on an index-2 extension: z_{h},
// z_{h^-1}, z_{hc}, ... keyed by the kernel symbol.
std::string kernel_symbol(const std::vector<IVec>& plus, const IVec& n) {
  for (size_t i = 0; i < plus.size(); ++i) {
    if (n == plus[i]) return "h" + std::to_string(i + 1);
    if (n == ivec_neg(plus[i])) return "h" + std::to_string(i + 1) + "^-1";
  }
  return ivec_str(n);
}

}  // namespace

QuantumWalk square2d_family(double alpha, const std::optional<CMat>& left) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("square2d_family: alpha must be in (0,1)");
  const double nu = std::sqrt(1.0 - alpha * alpha);
  const double a2 = alpha * alpha, an = alpha * nu, n2 = nu * nu;
  std::vector<CMat> plus = {m2(a2, 0, an, 0),    // A_{+e1}
                            m2(n2, 0, -an, 0)};  // A_{+e2}
  std::vector<CMat> minus = {m2(0, -an, 0, a2),  // A_{-e1}
                             m2(0, an, 0, n2)};  // A_{-e2}
  return lattice_walk(2, square_gens(), plus, minus, left);
}

QuantumWalk bcc3d_family(const std::array<double, 4>& a, double theta,
                         const std::optional<CMat>& left) {
  for (double ai : a)
    if (!(ai > 0.0))
      throw std::invalid_argument("bcc3d_family: alpha_i must be positive");
  if (std::abs(a[0] * a[1] - a[2] * a[3]) > 1e-12)
    throw std::invalid_argument("bcc3d_family: alpha1*alpha2 != alpha3*alpha4");
  double s = 0;
  for (double ai : a) s += ai * ai;
  if (std::abs(s - 1.0) > 1e-12)
    throw std::invalid_argument("bcc3d_family: sum alpha_i^2 != 1");

  const Complex ph = std::exp(kI * theta), phc = std::exp(-kI * theta);
  const Complex beta = a[0] + a[1] * ph;
  const Complex gamma = a[2] - a[3] * ph;
  const Complex bc = std::conj(beta), gc = std::conj(gamma);
  std::vector<CMat> plus = {
      a[0] * m2(beta, 0, -gc, 0),        // A_{+h1}
      a[1] * ph * m2(0, gamma, 0, bc),   // A_{+h2}
      -a[2] * m2(0, beta, 0, -gc),       // A_{+h3}
      -a[3] * phc * m2(gamma, 0, bc, 0)  // A_{+h4}
  };
  std::vector<CMat> minus = {
      a[0] * m2(0, gamma, 0, bc),        // A_{-h1}
      a[1] * phc * m2(beta, 0, -gc, 0),  // A_{-h2}
      a[2] * m2(gamma, 0, bc, 0),        // A_{-h3}
      a[3] * ph * m2(0, beta, 0, -gc)    // A_{-h4}
  };
  return lattice_walk(3, bcc_gens(), plus, minus, left);
}

GeneratingSet extension_scalar_graph(const std::string& which) {
  int d = which[0] == 'J' ? 2 : (which == "Dinf" ? 1 : 3);
  ExtensionData ext;
  bool found = false;
  for (auto& e : enumerate_index2_extensions(d))
    if (e.name == which) {
      ext = e;
      found = true;
    }
  if (!found)
    throw std::invalid_argument("unknown extension name: " + which);

  GeneratingSet gs;
  gs.ext = ext;
  auto plus = d == 1 ? std::vector<IVec>{{1}}
                     : (d == 2 ? square_gens() : bcc_gens());
  std::vector<IVec> sym = plus;
  for (auto& h : plus) sym.push_back(ivec_neg(h));
  // S' = {g, gc}: every symmetric kernel generator plus its reflection-coset
  // partner (the set is already closed under inverses).
  for (auto& h : sym) gs.plus_gens.push_back({h, 0});
  for (auto& h : sym) gs.plus_gens.push_back({h, 1});
  return gs;
}

QuantumWalk scalar_on_extension(const std::string& which,
                                const std::vector<Complex>& scalars) {
  auto gs = extension_scalar_graph(which);
  QuantumWalk w;
  w.ext = gs.ext;
  w.coin_dim = 1;
  w.gens = symmetric_closure(gs);
  if (scalars.size() != w.gens.size())
    throw std::invalid_argument("scalar_on_extension: expected " +
                                std::to_string(w.gens.size()) + " scalars");
  auto plus = gs.ext.dim == 1
                  ? std::vector<IVec>{{1}}
                  : (gs.ext.dim == 2 ? square_gens() : bcc_gens());
  for (size_t i = 0; i < w.gens.size(); ++i) {
    CMat m(1, 1);
    m << scalars[i];
    w.matrices.push_back(m);
    std::string sym = kernel_symbol(plus, w.gens[i].n);
    w.gen_labels.push_back("z_{" + sym + (w.gens[i].q == 1 ? "c}" : "}"));
  }
  return w;
}

QuantumWalk dinfty_scalar(Complex z_plus, Complex z_minus, Complex z_c) {
  QuantumWalk w;
  bool found = false;
  for (auto& e : enumerate_index2_extensions(1))
    if (e.quotient.order == 2) {
      w.ext = e;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("dihedral extension missing");
  w.coin_dim = 1;
  w.gens = {{{1}, 0}, {{-1}, 0}, {{1}, 1}, {{-1}, 1}};
  for (Complex z : {z_plus, z_minus, z_c, z_c}) {
    CMat m(1, 1);
    m << z;
    w.matrices.push_back(m);
  }
  w.gen_labels = {"z_+", "z_-", "z_c", "z_c"};
  return w;
}

QuantumWalk dinfty_scalar_unitary(double a) {
  if (a < 0.0 || a > 1.0)
    throw std::invalid_argument("dinfty_scalar_unitary: a must be in [0,1]");
  return dinfty_scalar(a, -(1.0 - a), kI * std::sqrt(a * (1.0 - a)));
}

QuantumWalk dirac_walk(int d, double m) {
  if (d < 1 || d > 3) throw std::invalid_argument("dirac_walk: d in {1,2,3}");
  if (!(m >= 0.0 && m < 1.0))
    throw std::invalid_argument("dirac_walk: m must be in [0,1)");
  const double n = std::sqrt(1.0 - m * m);

  if (d == 1) {
    // Coarse-graining of the dihedral family at a = (1+n)/2:
    // A_{+-1} = [[z_+-, i m/2], [i m/2, z_-+]].
    const Complex zp = (1.0 + n) / 2.0, zm = -(1.0 - n) / 2.0;
    const Complex zc = kI * (m / 2.0);
    std::vector<CMat> plus = {m2(zp, zc, zc, zm)};
    std::vector<CMat> minus = {m2(zm, zc, zc, zp)};
    return lattice_walk(1, {{1}}, plus, minus, {});
  }

  const QuantumWalk base = d == 2
                               ? square2d_family(1.0 / std::sqrt(2.0))
                               : bcc3d_family({0.5, 0.5, 0.5, 0.5}, 0.0);
  QuantumWalk w;
  w.ext = ExtensionData::trivial_lattice(d);
  w.coin_dim = 4;
  // Massive doubling: A_h = diag(n A_h, n A_{-h}^+), identity loop
  // antidiag(i m I, i m I).
  for (size_t i = 0; i < base.gens.size(); ++i) {
    size_t j = i ^ 1;  // base lists generators as (+h, -h) pairs
    CMat big = CMat::Zero(4, 4);
    big.block(0, 0, 2, 2) = n * base.matrices[i];
    big.block(2, 2, 2, 2) = n * base.matrices[j].adjoint();
    w.gens.push_back(base.gens[i]);
    w.matrices.push_back(big);
  }
  CMat loop = CMat::Zero(4, 4);
  loop.block(0, 2, 2, 2) = kI * m * CMat::Identity(2, 2);
  loop.block(2, 0, 2, 2) = kI * m * CMat::Identity(2, 2);
  w.gens.push_back({IVec(d, 0), 0});
  w.matrices.push_back(loop);
  w.includes_identity = true;
  return w;
}

QuantumWalk dirac_scalar_parent(int d, double m) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("dirac_scalar_parent: d in {2,3}");
  if (!(m >= 0.0 && m < 1.0))
    throw std::invalid_argument("dirac_scalar_parent: m must be in [0,1)");
  const double n = std::sqrt(1.0 - m * m);

  // Semidirect Z^d x| (Z2 x Z2): phi_1 = -I, phi_2 swaps/exchanges the two
  // carrier generators, phi_3 = phi_1 phi_2; Klein-4 indices compose by XOR.
  IMat phi2;
  IVec h1, h2;
  if (d == 2) {
    phi2 = {{0, 1}, {1, 0}};
    h1 = {1, 0};
    h2 = {0, 1};
  } else {
    phi2 = {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
    h1 = {1, 1, 1};
    h2 = {-1, -1, 1};
  }
  ExtensionData ext;
  ext.dim = d;
  ext.quotient = FiniteQuotient::klein4();
  IMat id = imat_identity(d);
  ext.phi = {id, imat_neg(id), phi2, imat_neg(phi2)};
  ext.cocycle.assign(4, std::vector<IVec>(4, IVec(d, 0)));
  ext.name = "dirac_parent_" + std::to_string(d) + "d";

  QuantumWalk w;
  w.ext = ext;
  w.coin_dim = 1;
  auto add = [&](const IVec& v, int q, Complex z, const std::string& lbl) {
    w.gens.push_back({v, q});
    CMat mm(1, 1);
    mm << z;
    w.matrices.push_back(mm);
    w.gen_labels.push_back(lbl);
  };
  // Kernel couplings carry the kinetic weight; the q1 coset carries the mass
  // split; the q2 reflection and the remaining S' slots carry weight zero.
  add(h1, 0, n / 2.0, "z_{h1}");
  add(h2, 0, n / 2.0, "z_{h2}");
  add(ivec_neg(h1), 0, 0.0, "z_{h1^-1}");
  add(ivec_neg(h2), 0, 0.0, "z_{h2^-1}");
  add(h1, 1, kI * ((1.0 + m) / 2.0), "w_{h1}");
  add(h2, 1, -kI * ((1.0 - m) / 2.0), "w_{h2}");
  add(ivec_neg(h1), 1, 0.0, "w_{h1^-1}");
  add(ivec_neg(h2), 1, 0.0, "w_{h2^-1}");
  add(IVec(d, 0), 2, 0.0, "z_{c2}");
  return w;
}

GeneratingSet dirac_presentation_graph(int d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("dirac_presentation_graph: d in {2,3}");
  IMat phi1, phi2;
  if (d == 2) {
    phi1 = {{1, 0}, {0, -1}};
    phi2 = {{-1, 0}, {0, 1}};
  } else {
    phi1 = {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    phi2 = {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  }
  ExtensionData ext;
  ext.dim = d;
  ext.quotient = FiniteQuotient::klein4();
  ext.phi = {imat_identity(d), phi1, phi2, imat_mul(phi1, phi2)};
  ext.cocycle.assign(4, std::vector<IVec>(4, IVec(d, 0)));
  ext.name = "dirac_presentation_" + std::to_string(d) + "d";

  GeneratingSet gs;
  gs.ext = ext;
  auto plus = d == 2 ? square_gens() : bcc_gens();
  std::vector<IVec> sym = plus;
  for (auto& h : plus) sym.push_back(ivec_neg(h));
  for (auto& h : sym) gs.plus_gens.push_back({h, 0});
  for (auto& h : sym) gs.plus_gens.push_back({h, 1});
  gs.plus_gens.push_back({IVec(d, 0), 2});
  return gs;
}

std::map<std::string, std::string> catalog_names() {
  return {
      {"square2d", "2D square-lattice family; params: alpha in (0,1)"},
      {"bcc3d",
       "3D BCC family; params: alpha1..alpha4 (>0, a1*a2=a3*a4, sum sq = 1), "
       "theta"},
      {"dinfty", "dihedral scalar family; params: a in [0,1]"},
      {"dirac", "massive walk; params: d in {1,2,3}, m in [0,1)"},
      {"dirac_parent",
       "scalar parent of the massive walk; params: d in {2,3}, m in [0,1)"},
      {"scalar",
       "scalar walk on a named index-2 extension (J1..J4, K1..K5, Dinf); "
       "pass scalars explicitly"},
  };
}

QuantumWalk catalog_build(const std::string& name,
                          const std::map<std::string, double>& params,
                          const std::vector<Complex>& scalars) {
  auto get = [&](const std::string& key, double dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
  };
  if (name == "square2d") return square2d_family(get("alpha", 1.0 / std::sqrt(2.0)));
  if (name == "bcc3d")
    return bcc3d_family({get("alpha1", 0.5), get("alpha2", 0.5),
                         get("alpha3", 0.5), get("alpha4", 0.5)},
                        get("theta", 0.0));
  if (name == "dinfty") return dinfty_scalar_unitary(get("a", 0.5));
  if (name == "dirac")
    return dirac_walk(static_cast<int>(get("d", 1)), get("m", 0.0));
  if (name == "dirac_parent")
    return dirac_scalar_parent(static_cast<int>(get("d", 2)), get("m", 0.0));
  if (name == "Dinf" ||
      (name.size() >= 2 && (name[0] == 'J' || name[0] == 'K')))
    return scalar_on_extension(name, scalars);
  throw std::invalid_argument("unknown catalog walk: " + name);
}

}  // namespace cw
