#include "cayleywalk/capi.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "cayleywalk/catalog.hpp"
#include "cayleywalk/coarse_grain.hpp"
#include "cayleywalk/json_io.hpp"
#include "cayleywalk/momentum.hpp"
#include "cayleywalk/simulate.hpp"
#include "cayleywalk/walk.hpp"

using nlohmann::json;

struct cw_walk {
  cw::QuantumWalk w;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

// Runs fn, mapping exceptions to status 2 with a message.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 2;
  } catch (...) {
    g_last_error = "unknown error";
    return 2;
  }
}

json complex_json(const cw::Complex& z) {
  return json::array({z.real(), z.imag()});
}

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

extern "C" {

const char* cw_last_error(void) { return g_last_error.c_str(); }

void cw_string_free(char* s) { std::free(s); }

int cw_walk_load(const char* walk_json, cw_walk** out) {
  return guarded([&] {
    if (!walk_json || !out) throw std::invalid_argument("null argument");
    auto w = std::make_unique<cw_walk>();
    w->w = cw::walk_from_string(walk_json);
    *out = w.release();
    return 0;
  });
}

void cw_walk_free(cw_walk* w) { delete w; }

int cw_walk_to_json(const cw_walk* w, char** out_json) {
  return guarded([&] {
    if (!w || !out_json) throw std::invalid_argument("null argument");
    set_out(out_json, cw::walk_to_string(w->w));
    return 0;
  });
}

int cw_walk_verify(const cw_walk* w, char** report_json) {
  return guarded([&] {
    if (!w) throw std::invalid_argument("null walk");
    auto rep = cw::unitarity_residual(w->w);
    bool pass = rep.residual <= w->w.tol();
    json j = {{"residual", rep.residual},
              {"tolerance", w->w.tol()},
              {"pass", pass},
              {"breakdown", json::array()}};
    for (const auto& c : rep.breakdown)
      j["breakdown"].push_back({{"g", cw::element_str(c.g)},
                                {"left", c.left_norm},
                                {"right", c.right_norm}});
    set_out(report_json, j.dump(2));
    return pass ? 0 : 1;
  });
}

int cw_walk_coarse_grain(const cw_walk* w, char** walk_json,
                         char** provenance_text) {
  return guarded([&] {
    if (!w) throw std::invalid_argument("null walk");
    auto cg = cw::coarse_grain(w->w);
    set_out(walk_json, cw::walk_to_string(cg.base));
    set_out(provenance_text, cw::provenance_pattern(cg, w->w.gen_labels));
    return 0;
  });
}

int cw_walk_dispersion(const cw_walk* w, int grid_points, char** csv) {
  return guarded([&] {
    if (!w || !csv) throw std::invalid_argument("null argument");
    auto grid = cw::dispersion(w->w, grid_points);
    const int d = w->w.ext.dim;
    std::ostringstream os;
    for (int i = 0; i < d; ++i) os << (i ? "," : "") << "k_" << (i + 1);
    for (int i = 0; i < w->w.coin_dim; ++i) os << ",omega_" << (i + 1);
    os << "\n";
    for (const auto& p : grid.points) {
      for (int i = 0; i < d; ++i) os << (i ? "," : "") << csv_number(p.k[i]);
      for (double om : p.omegas) os << "," << csv_number(om);
      os << "\n";
    }
    set_out(csv, os.str());
    return 0;
  });
}

int cw_walk_evolve(const cw_walk* w, int steps, int patch_size,
                   const char* init_json, char** csv) {
  return guarded([&] {
    if (!w || !csv) throw std::invalid_argument("null argument");
    if (patch_size < 1) throw std::invalid_argument("patch size must be >= 1");
    const int d = w->w.ext.dim;
    cw::TorusPatch patch{patch_size, d, w->w.ext.quotient.order, w->w.coin_dim};
    cw::WalkState state;
    if (!init_json || json::parse(init_json).value("type", "delta") == "delta") {
      std::vector<int> site(d, 0);
      int q = 0;
      if (init_json) {
        json j = json::parse(init_json);
        site = j.value("site", site);
        q = j.value("q", 0);
      }
      state = cw::delta_state(patch, site, q);
    } else {
      json j = json::parse(init_json);
      if (j.at("type") != "gauss")
        throw std::invalid_argument("init type must be delta or gauss");
      state = cw::gaussian_state(patch, j.at("k0").get<std::vector<double>>(),
                                 j.at("width").get<double>());
    }
    state = cw::evolve(w->w, state, steps);
    auto prob = cw::probability_distribution(state);

    std::ostringstream os;
    for (int i = 0; i < d; ++i) os << "x_" << (i + 1) << ",";
    os << "q,probability\n";
    std::vector<int> site(d, 0);
    const int Q = patch.qsize;
    long long flat = 0;
    while (true) {
      for (int q = 0; q < Q; ++q, ++flat) {
        for (int i = 0; i < d; ++i) os << site[i] << ",";
        os << q << "," << csv_number(prob[flat]) << "\n";
      }
      int axis = d - 1;
      while (axis >= 0 && ++site[axis] == patch.L) site[axis--] = 0;
      if (axis < 0) break;
    }
    set_out(csv, os.str());
    return 0;
  });
}

int cw_walk_compare(const cw_walk* w, int steps, int patch_size,
                    double* max_deviation) {
  return guarded([&] {
    if (!w || !max_deviation) throw std::invalid_argument("null argument");
    double dev = cw::compare_representations(w->w, steps, patch_size);
    *max_deviation = dev;
    return dev <= w->w.tol() ? 0 : 1;
  });
}

int cw_walk_search(const cw_walk* w, int restarts, unsigned seed,
                   char** result_json) {
  return guarded([&] {
    if (!w || !result_json) throw std::invalid_argument("null argument");
    cw::GeneratingSet gs;
    gs.ext = w->w.ext;
    gs.plus_gens = w->w.gens;
    gs.includes_identity = w->w.includes_identity;
    auto res = cw::scalar_solution_search(gs, restarts, seed);
    json j = {{"quadrangular", res.quadrangular},
              {"best_residual", res.best_residual},
              {"solutions", json::array()}};
    for (const auto& sol : res.solutions) {
      json s = json::array();
      for (const auto& z : sol) s.push_back(complex_json(z));
      j["solutions"].push_back(s);
    }
    set_out(result_json, j.dump(2));
    return 0;
  });
}

int cw_graph_quadrangularity(const cw_walk* w, char** report_json) {
  return guarded([&] {
    if (!w) throw std::invalid_argument("null walk");
    cw::GeneratingSet gs;
    gs.ext = w->w.ext;
    gs.plus_gens = w->w.gens;
    gs.includes_identity = w->w.includes_identity;
    auto rep = cw::quadrangularity_check(gs);
    json viols = json::array();
    for (const auto& [h1, h2] : rep.violations)
      viols.push_back(cw::element_str(h1) + ", " + cw::element_str(h2));
    json j = {{"quadrangular", rep.holds}, {"violations", viols}};
    set_out(report_json, j.dump(2));
    return rep.holds ? 0 : 1;
  });
}

int cw_extensions_enumerate(int dim, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    json arr = json::array();
    for (const auto& e : cw::enumerate_index2_extensions(dim))
      arr.push_back(cw::extension_to_json(e));
    set_out(out, arr.dump(2));
    return 0;
  });
}

int cw_extension_validate(const char* extension_json, char** report_json) {
  return guarded([&] {
    if (!extension_json) throw std::invalid_argument("null argument");
    auto ext = cw::extension_from_string(extension_json);
    auto violations = cw::validate_extension(ext);
    json j = {{"valid", violations.empty()}, {"violations", violations}};
    set_out(report_json, j.dump(2));
    return violations.empty() ? 0 : 1;
  });
}

int cw_catalog_list(char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    json j = cw::catalog_names();
    set_out(out, j.dump(2));
    return 0;
  });
}

int cw_catalog_emit(const char* name, const char* params_json,
                    char** walk_json) {
  return guarded([&] {
    if (!name || !walk_json) throw std::invalid_argument("null argument");
    std::map<std::string, double> params;
    std::vector<cw::Complex> scalars;
    if (params_json) {
      json j = json::parse(params_json);
      for (auto& [key, val] : j.items()) {
        if (key == "scalars") {
          for (const auto& z : val)
            scalars.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        } else {
          params[key] = val.get<double>();
        }
      }
    }
    auto w = cw::catalog_build(name, params, scalars);
    set_out(walk_json, cw::walk_to_string(w));
    return 0;
  });
}

int cw_nogo_certificate(int dim, int samples, int search_restarts,
                        unsigned seed, char** report_json) {
  return guarded([&] {
    auto cert = cw::isotropic_scalar_nogo_certificate(dim, samples,
                                                      search_restarts, seed);
    json j = {{"dim", cert.dim},
              {"obstruction", cert.obstruction},
              {"samples", cert.samples},
              {"min_residual", cert.min_residual},
              {"min_bound", cert.min_bound},
              {"search_best", cert.search_best},
              {"holds", cert.holds}};
    set_out(report_json, j.dump(2));
    return cert.holds ? 0 : 1;
  });
}

}  // extern "C"
