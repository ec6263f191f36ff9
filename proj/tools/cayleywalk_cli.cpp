// Command-line front end; talks to the library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayleywalk/capi.h"

namespace {

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { cw_string_free(s); }
  char** out() { return &s; }
  std::string str() const { return s ? s : ""; }
};

struct WalkGuard {
  cw_walk* w = nullptr;
  ~WalkGuard() { cw_walk_free(w); }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot open output file: " + path);
  out << content;
}

int fail(int status) {
  std::string msg = cw_last_error();
  if (!msg.empty()) std::cerr << "error: " << msg << "\n";
  return status;
}

int load_walk(const std::string& path, WalkGuard& wg) {
  std::string text = read_file(path);
  return cw_walk_load(text.c_str(), &wg.w);
}

// Formats doubles the way the JSON payloads do.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum walks on virtually Abelian Cayley graphs"};
  app.require_subcommand(1);

  std::string in_path, out_path = "-", prov_path;
  int dim = 2, grid = 21, steps = 50, size = 64, restarts = 100;
  unsigned seed = 1;
  int samples = 10000;
  std::string name, init_type = "delta";
  std::vector<double> k0;
  double width = 0.0;
  std::vector<std::string> param_kv;
  std::string scalars_arg;

  int rc = 0;

  // extensions enumerate|validate
  auto* ext = app.add_subcommand("extensions", "group extension operations");
  ext->require_subcommand(1);
  auto* ext_enum = ext->add_subcommand("enumerate",
                                       "list index-2 extension classes");
  ext_enum->add_option("--dim", dim, "lattice dimension (1-3)");
  ext_enum->add_option("-o,--output", out_path, "output path ('-' = stdout)");
  ext_enum->callback([&] {
    StringGuard s;
    rc = cw_extensions_enumerate(dim, s.out());
    if (rc == 2) return;
    write_output(out_path, s.str());
  });
  auto* ext_val = ext->add_subcommand("validate", "validate extension JSON");
  ext_val->add_option("input", in_path, "extension JSON file")->required();
  ext_val->add_option("-o,--output", out_path);
  ext_val->callback([&] {
    StringGuard s;
    rc = cw_extension_validate(read_file(in_path).c_str(), s.out());
    if (rc == 2) return;
    write_output(out_path, s.str());
  });

  // graph quadrangularity
  auto* graph = app.add_subcommand("graph", "Cayley graph checks");
  graph->require_subcommand(1);
  auto* quad = graph->add_subcommand("quadrangularity",
                                     "scalar-unitarity necessary condition");
  quad->add_option("input", in_path, "walk JSON file")->required();
  quad->add_option("-o,--output", out_path);
  quad->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    StringGuard s;
    rc = cw_graph_quadrangularity(w.w, s.out());
    if (rc == 2) return;
    std::cout << (rc == 0 ? "PASS" : "FAIL") << "\n";
    write_output(out_path, s.str());
  });

  // walk ...
  auto* walk = app.add_subcommand("walk", "quantum walk operations");
  walk->require_subcommand(1);

  auto* verify = walk->add_subcommand("verify", "unitarity check");
  verify->add_option("input", in_path)->required();
  verify->add_option("-o,--output", out_path);
  verify->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    StringGuard s;
    rc = cw_walk_verify(w.w, s.out());
    if (rc == 2) return;
    write_output(out_path, s.str());
  });

  auto* cg = walk->add_subcommand("coarse-grain",
                                  "regroup a scalar walk into a coin walk");
  cg->add_option("input", in_path)->required();
  cg->add_option("-o,--output", out_path);
  cg->add_option("--provenance", prov_path, "symbol-placement listing path");
  cg->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    StringGuard wj, pt;
    rc = cw_walk_coarse_grain(w.w, wj.out(), pt.out());
    if (rc != 0) return;
    write_output(out_path, wj.str());
    if (!prov_path.empty()) write_output(prov_path, pt.str());
  });

  auto* disp = walk->add_subcommand("dispersion", "eigenphase grid (CSV)");
  disp->add_option("input", in_path)->required();
  disp->add_option("--grid", grid, "points per momentum axis");
  disp->add_option("-o,--output", out_path);
  disp->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    StringGuard s;
    rc = cw_walk_dispersion(w.w, grid, s.out());
    if (rc != 0) return;
    write_output(out_path, s.str());
  });

  auto* evolve = walk->add_subcommand("evolve",
                                      "state evolution on a periodic patch");
  evolve->add_option("input", in_path)->required();
  evolve->add_option("--steps", steps);
  evolve->add_option("--size", size, "sites per axis");
  evolve->add_option("--init", init_type, "delta | gauss");
  evolve->add_option("--k0", k0, "packet momentum (gauss)");
  evolve->add_option("--width", width, "packet width (gauss)");
  evolve->add_option("-o,--output", out_path);
  evolve->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    std::ostringstream init;
    if (init_type == "gauss") {
      init << "{\"type\":\"gauss\",\"k0\":[";
      for (size_t i = 0; i < k0.size(); ++i) init << (i ? "," : "") << k0[i];
      init << "],\"width\":" << width << "}";
    } else {
      init << "{\"type\":\"delta\"}";
    }
    StringGuard s;
    rc = cw_walk_evolve(w.w, steps, size, init.str().c_str(), s.out());
    if (rc != 0) return;
    write_output(out_path, s.str());
  });

  auto* cmp = walk->add_subcommand(
      "compare", "scalar vs coarse-grained evolution deviation");
  cmp->add_option("input", in_path)->required();
  cmp->add_option("--steps", steps);
  cmp->add_option("--size", size);
  cmp->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    double dev = 0;
    rc = cw_walk_compare(w.w, steps, size, &dev);
    if (rc == 2) return;
    std::cout << "max deviation " << fmt(dev) << " "
              << (rc == 0 ? "PASS" : "FAIL") << "\n";
  });

  auto* search = walk->add_subcommand(
      "search", "numerical scalar unitary search on the generating set");
  search->add_option("input", in_path)->required();
  search->add_option("--restarts", restarts);
  search->add_option("--seed", seed);
  search->add_option("-o,--output", out_path);
  search->callback([&] {
    WalkGuard w;
    rc = load_walk(in_path, w);
    if (rc != 0) return;
    StringGuard s;
    rc = cw_walk_search(w.w, restarts, seed, s.out());
    if (rc != 0) return;
    write_output(out_path, s.str());
  });

  auto* nogo = walk->add_subcommand(
      "nogo", "isotropic scalar walk impossibility certificate");
  nogo->add_option("--dim", dim)->required();
  nogo->add_option("--samples", samples);
  nogo->add_option("--restarts", restarts);
  nogo->add_option("--seed", seed);
  nogo->add_option("-o,--output", out_path);
  nogo->callback([&] {
    StringGuard s;
    rc = cw_nogo_certificate(dim, samples, restarts, seed, s.out());
    if (rc == 2) return;
    write_output(out_path, s.str());
  });

  // catalog list|emit
  auto* cat = app.add_subcommand("catalog", "built-in walk constructors");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "available names");
  list->add_option("-o,--output", out_path);
  list->callback([&] {
    StringGuard s;
    rc = cw_catalog_list(s.out());
    if (rc != 0) return;
    write_output(out_path, s.str());
  });
  auto* emit = cat->add_subcommand("emit", "construct a catalog walk");
  emit->add_option("name", name)->required();
  emit->add_option("--param,-p", param_kv,
                   "numeric parameter, key=value (repeatable)");
  emit->add_option("--scalars", scalars_arg,
                   "scalar list 're,im;re,im;...' for scalar walks");
  emit->add_option("-o,--output", out_path);
  emit->callback([&] {
    std::ostringstream params;
    params << "{";
    bool first = true;
    for (const auto& kv : param_kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("--param expects key=value: " + kv);
      params << (first ? "" : ",") << "\"" << kv.substr(0, eq)
             << "\":" << kv.substr(eq + 1);
      first = false;
    }
    if (!scalars_arg.empty()) {
      params << (first ? "" : ",") << "\"scalars\":[";
      std::istringstream ss(scalars_arg);
      std::string pair;
      bool pfirst = true;
      while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        std::string re = pair.substr(0, comma);
        std::string im = comma == std::string::npos ? "0" : pair.substr(comma + 1);
        params << (pfirst ? "" : ",") << "[" << re << "," << im << "]";
        pfirst = false;
      }
      params << "]";
    }
    params << "}";
    StringGuard s;
    rc = cw_catalog_emit(name.c_str(), params.str().c_str(), s.out());
    if (rc != 0) return;
    write_output(out_path, s.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (rc == 2) return fail(2);
  return rc;
}
