#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "cayleywalk/capi.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

// RAII for strings returned by the C API.
struct Str {
  char* p = nullptr;
  ~Str() { cw_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

struct Walk {
  cw_walk* w = nullptr;
  ~Walk() { cw_walk_free(w); }
};

std::string emit(const char* name, const char* params = nullptr) {
  Str out;
  REQUIRE(cw_catalog_emit(name, params, &out.p) == 0);
  return out.view();
}

}  // namespace

TEST_CASE("load, verify and round-trip a catalog walk") {
  std::string wj = emit("dirac", R"({"d": 1, "m": 0.6})");
  Walk w;
  REQUIRE(cw_walk_load(wj.c_str(), &w.w) == 0);

  Str report;
  CHECK(cw_walk_verify(w.w, &report.p) == 0);
  json rep = json::parse(report.view());
  CHECK(rep["pass"].get<bool>());
  CHECK(rep["residual"].get<double>() <= rep["tolerance"].get<double>());
  CHECK(!rep["breakdown"].empty());

  // to_json -> load -> to_json is a fixed point
  Str again;
  REQUIRE(cw_walk_to_json(w.w, &again.p) == 0);
  Walk w2;
  REQUIRE(cw_walk_load(again.p, &w2.w) == 0);
  Str third;
  REQUIRE(cw_walk_to_json(w2.w, &third.p) == 0);
  CHECK(again.view() == third.view());
}

TEST_CASE("malformed input reports a structural error") {
  cw_walk* w = nullptr;
  CHECK(cw_walk_load("this is not json", &w) == 2);
  CHECK(w == nullptr);
  CHECK(std::strlen(cw_last_error()) > 0);

  CHECK(cw_walk_load(R"({"extension": "trivial"})", &w) == 2);
  CHECK(std::strlen(cw_last_error()) > 0);

  Str out;
  CHECK(cw_catalog_emit("no-such-walk", nullptr, &out.p) == 2);
  CHECK(std::strlen(cw_last_error()) > 0);
}

TEST_CASE("verification failure returns 1 with a full report") {
  std::string wj = emit("dirac", R"({"d": 1, "m": 0.6})");
  json doc = json::parse(wj);
  // scale one matrix entry to break unitarity
  doc["matrices"][0][0][0][0] = 0.3;
  Walk w;
  REQUIRE(cw_walk_load(doc.dump().c_str(), &w.w) == 0);

  Str report;
  CHECK(cw_walk_verify(w.w, &report.p) == 1);
  json rep = json::parse(report.view());
  CHECK_FALSE(rep["pass"].get<bool>());
  CHECK(rep["residual"].get<double>() > rep["tolerance"].get<double>());
}

TEST_CASE("coarse-graining through the C layer") {
  std::string wj = emit("Dinf", R"({"scalars": [[0.49, 0], [0.51, 0],
                                                [0.4999, 0], [0.4999, 0]]})");
  Walk w;
  REQUIRE(cw_walk_load(wj.c_str(), &w.w) == 0);

  Str cg, prov;
  REQUIRE(cw_walk_coarse_grain(w.w, &cg.p, &prov.p) == 0);
  json cgj = json::parse(cg.view());
  CHECK(cgj["coin_dim"] == 2);
  CHECK(cgj["extension"] == "trivial");
  CHECK(prov.view().find("z_{h1c}") != std::string::npos);

  // non-scalar input is a usage error
  std::string sq = emit("square2d", nullptr);
  Walk w2;
  REQUIRE(cw_walk_load(sq.c_str(), &w2.w) == 0);
  Str dummy;
  CHECK(cw_walk_coarse_grain(w2.w, &dummy.p, nullptr) == 2);
}

TEST_CASE("dispersion and evolution CSV output") {
  std::string wj = emit("dirac", R"({"d": 1, "m": 0.3})");
  Walk w;
  REQUIRE(cw_walk_load(wj.c_str(), &w.w) == 0);

  Str csv;
  REQUIRE(cw_walk_dispersion(w.w, 11, &csv.p) == 0);
  std::string text = csv.view();
  CHECK(text.rfind("k_1,omega_1,omega_2", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 11);

  Str evo;
  REQUIRE(cw_walk_evolve(w.w, 10, 32, nullptr, &evo.p) == 0);
  CHECK(evo.view().rfind("x_1,q,probability", 0) == 0);

  Str gauss;
  REQUIRE(cw_walk_evolve(w.w, 5, 32,
                         R"({"type": "gauss", "k0": [0.5], "width": 2.0})",
                         &gauss.p) == 0);
  CHECK(gauss.view().rfind("x_1,q,probability", 0) == 0);

  Str bad;
  CHECK(cw_walk_evolve(w.w, 5, 32, R"({"type": "gauss", "k0": [0.5],
                                       "width": -1})", &bad.p) == 2);
}

TEST_CASE("representation comparison through the C layer") {
  std::string wj = emit("dinfty", R"({"a": 0.7})");
  Walk w;
  REQUIRE(cw_walk_load(wj.c_str(), &w.w) == 0);
  double dev = 1.0;
  CHECK(cw_walk_compare(w.w, 25, 64, &dev) == 0);
  CHECK(dev <= 1e-12);
}

TEST_CASE("scalar search and quadrangularity through the C layer") {
  std::string wj = emit("dinfty", nullptr);
  Walk w;
  REQUIRE(cw_walk_load(wj.c_str(), &w.w) == 0);

  Str quad;
  CHECK(cw_graph_quadrangularity(w.w, &quad.p) == 0);
  json qj = json::parse(quad.view());
  CHECK(qj["quadrangular"].get<bool>());
  CHECK(qj["violations"].empty());

  Str search;
  REQUIRE(cw_walk_search(w.w, 4, 99, &search.p) == 0);
  json sj = json::parse(search.view());
  CHECK(sj["quadrangular"].get<bool>());
  CHECK(sj["best_residual"].get<double>() <= 1e-8);
  CHECK(!sj["solutions"].empty());
}

TEST_CASE("extension enumeration and validation") {
  Str list;
  REQUIRE(cw_extensions_enumerate(2, &list.p) == 0);
  json arr = json::parse(list.view());
  REQUIRE(arr.size() == 4);
  CHECK(arr[0]["name"] == "J1");

  Str ok;
  CHECK(cw_extension_validate(arr[1].dump().c_str(), &ok.p) == 0);
  CHECK(json::parse(ok.view())["valid"].get<bool>());

  // breaking the involution phi^2 = I must be flagged, not crash
  json bad = arr[1];
  bad["phi"][1][0][0] = 1;
  Str rep;
  CHECK(cw_extension_validate(bad.dump().c_str(), &rep.p) == 1);
  json rj = json::parse(rep.view());
  CHECK_FALSE(rj["valid"].get<bool>());
  CHECK(!rj["violations"].empty());

  CHECK(cw_extensions_enumerate(5, &list.p) == 2);
}

TEST_CASE("catalog listing names every constructor") {
  Str list;
  REQUIRE(cw_catalog_list(&list.p) == 0);
  json names = json::parse(list.view());
  for (const char* key : {"square2d", "bcc3d", "dirac", "dirac_parent",
                          "dinfty", "scalar"})
    CHECK(names.contains(key));
}

TEST_CASE("no-go certificate verdict") {
  Str rep;
  CHECK(cw_nogo_certificate(2, 500, 5, 7, &rep.p) == 0);
  json rj = json::parse(rep.view());
  CHECK(rj["holds"].get<bool>());
  CHECK(rj["min_bound"].get<double>() >= 1.0 / 3.0 - 1e-12);

  CHECK(cw_nogo_certificate(1, 10, 1, 0, &rep.p) == 2);
}
