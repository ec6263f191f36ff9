#include "cayleywalk/json_io.hpp"

#include <stdexcept>

namespace cw {

using nlohmann::json;

json extension_to_json(const ExtensionData& ext) {
  json j;
  j["dim"] = ext.dim;
  j["quotient"] = {{"order", ext.quotient.order}, {"table", ext.quotient.table}};
  j["phi"] = ext.phi;
  j["cocycle"] = ext.cocycle;
  if (!ext.name.empty()) j["name"] = ext.name;
  if (!ext.presentation.empty()) j["presentation"] = ext.presentation;
  return j;
}

ExtensionData extension_from_json(const json& j) {
  ExtensionData ext;
  ext.dim = j.at("dim").get<int>();
  auto table = j.at("quotient").at("table").get<std::vector<std::vector<int>>>();
  ext.quotient = FiniteQuotient::from_table(std::move(table));
  if (j.at("quotient").at("order").get<int>() != ext.quotient.order)
    throw std::runtime_error("quotient order does not match table size");
  ext.phi = j.at("phi").get<std::vector<IMat>>();
  ext.cocycle = j.at("cocycle").get<std::vector<std::vector<IVec>>>();
  ext.name = j.value("name", "");
  ext.presentation = j.value("presentation", "");
  return ext;
}

json walk_to_json(const QuantumWalk& w) {
  json j;
  j["extension"] =
      w.ext.is_trivial_quotient() && w.ext.is_semidirect()
          ? json("trivial")
          : extension_to_json(w.ext);
  if (j["extension"] == json("trivial")) {
    // keep the dimension recoverable for the trivial case
    j["dim"] = w.ext.dim;
  }
  j["generators"] = json::array();
  for (const auto& g : w.gens)
    j["generators"].push_back({{"n", g.n}, {"q", g.q}});
  j["includes_identity"] = w.includes_identity;
  j["coin_dim"] = w.coin_dim;
  j["matrices"] = json::array();
  for (const CMat& m : w.matrices) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c)
        row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(row);
    }
    j["matrices"].push_back(rows);
  }
  if (!w.gen_labels.empty()) j["gen_labels"] = w.gen_labels;
  j["tolerance"] = w.tol();
  return j;
}

QuantumWalk walk_from_json(const json& j) {
  QuantumWalk w;
  const json& ej = j.at("extension");
  if (ej.is_string()) {
    if (ej.get<std::string>() != "trivial")
      throw std::runtime_error("extension must be an object or \"trivial\"");
    int dim = j.value("dim", 0);
    if (dim == 0 && !j.at("generators").empty())
      dim = static_cast<int>(j.at("generators")[0].at("n").size());
    if (dim <= 0) throw std::runtime_error("cannot infer lattice dimension");
    w.ext = ExtensionData::trivial_lattice(dim);
  } else {
    w.ext = extension_from_json(ej);
  }
  for (const json& gj : j.at("generators")) {
    GroupElement g;
    g.n = gj.at("n").get<IVec>();
    g.q = gj.at("q").get<int>();
    if (static_cast<int>(g.n.size()) != w.ext.dim)
      throw std::runtime_error("generator dimension mismatch");
    if (g.q < 0 || g.q >= w.ext.quotient.order)
      throw std::runtime_error("generator quotient index out of range");
    w.gens.push_back(std::move(g));
  }
  w.includes_identity = j.value("includes_identity", false);
  w.coin_dim = j.at("coin_dim").get<int>();
  const json& ms = j.at("matrices");
  if (ms.size() != w.gens.size())
    throw std::runtime_error("matrix count does not match generator count");
  for (const json& mj : ms) {
    CMat m(w.coin_dim, w.coin_dim);
    if (static_cast<int>(mj.size()) != w.coin_dim)
      throw std::runtime_error("matrix has wrong number of rows");
    for (int r = 0; r < w.coin_dim; ++r) {
      if (static_cast<int>(mj[r].size()) != w.coin_dim)
        throw std::runtime_error("matrix has wrong number of columns");
      for (int c = 0; c < w.coin_dim; ++c)
        m(r, c) = Complex(mj[r][c].at(0).get<double>(),
                          mj[r][c].at(1).get<double>());
    }
    w.matrices.push_back(std::move(m));
  }
  if (j.contains("gen_labels"))
    w.gen_labels = j.at("gen_labels").get<std::vector<std::string>>();
  w.tolerance = j.value("tolerance", 0.0);
  return w;
}

std::string walk_to_string(const QuantumWalk& w) {
  return walk_to_json(w).dump(2);
}
QuantumWalk walk_from_string(const std::string& text) {
  return walk_from_json(json::parse(text));
}
std::string extension_to_string(const ExtensionData& ext) {
  return extension_to_json(ext).dump(2);
}
ExtensionData extension_from_string(const std::string& text) {
  return extension_from_json(json::parse(text));
}

}  // namespace cw
