#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "element_io.hpp"
#include "extension.hpp"
#include "generator.hpp"
#include "group_module.hpp"

namespace weakram {

using ojson = nlohmann::ordered_json;

inline constexpr const char* weakram_version = "0.1.0";

// Printed elements are truncated to a precision that depends only on the
// extension and the ideal exponent, so reruns at higher working precision
// emit identical certificates.
inline long display_precision(long e, long n) { return e * (std::llabs(n) + 2) + 8; }

template <class UF>
ojson extension_json(const Extension<UF>& ext) {
  ojson j;
  j["degree"] = ext.m();
  j["e"] = ext.e();
  j["f"] = ext.f_rel();
  ojson orders = ojson::array();
  for (long i = 0;; ++i) {
    long s = ext.filtration_size(i);
    orders.push_back(s);
    if (s == 1) break;
  }
  j["ramification_orders"] = orders;
  j["weakly_ramified"] = ext.weakly_ramified;
  j["different_valuation"] = ext.different_exp;
  return j;
}

template <class UF>
ojson group_json(const Extension<UF>& ext) {
  const int m = static_cast<int>(ext.m());
  bool abelian = true;
  for (int i = 0; i < m && abelian; ++i)
    for (int j = 0; j < i; ++j)
      if (ext.compose(i, j) != ext.compose(j, i)) {
        abelian = false;
        break;
      }
  ojson j;
  j["order"] = m;
  j["abelian"] = abelian;
  j["filtration_orders"] = extension_json(ext)["ramification_orders"];
  return j;
}

inline ojson matrix_json(const Mat<FFElem>& m) {
  ojson rows = ojson::array();
  for (const auto& r : m) {
    ojson row = ojson::array();
    for (const auto& x : r) row.push_back(ff_to_string(x));
    rows.push_back(row);
  }
  return rows;
}

inline ojson trace_json(const ConstructionTrace& t) {
  ojson j;
  j["method"] = t.method;
  j["n"] = t.n;
  j["tame_order"] = t.tame_order;
  j["wild_order"] = t.wild_order;
  j["bezout_a"] = t.bezout_a;
  j["bezout_b"] = t.bezout_b;
  j["unramified_steps"] = t.unram_steps;
  j["seed"] = t.seed;
  j["units"] = t.units;
  return j;
}

struct CertificateInfo {
  std::string command;
  std::string kind;
  long p = 0;
  int f = 1;
  std::string poly;
  long n = 1;
  std::uint64_t seed = 0;
  long precision = 0;
};

template <class UF>
ojson make_certificate(const CertificateInfo& info, const Extension<UF>& ext,
                       const ConstructionTrace* trace, const TowerElem<UF>* element,
                       const FreenessCertificate* freeness, const AssocOrderReport* assoc,
                       bool verdict) {
  ojson j;
  j["schema"] = 1;
  j["tool"] = std::string("weakram ") + weakram_version;
  j["command"] = info.command;
  ojson base;
  base["kind"] = info.kind;
  base["p"] = info.p;
  base["f"] = info.f;
  j["base"] = base;
  j["polynomial"] = info.poly;
  j["n"] = info.n;
  j["seed"] = info.seed;
  j["precision"] = info.precision;
  j["extension"] = extension_json(ext);
  j["group"] = group_json(ext);
  if (trace) j["construction"] = trace_json(*trace);
  if (element)
    j["element"] = print_element(*element, display_precision(ext.e(), info.n));
  if (freeness) {
    ojson v;
    v["residue_matrix"] = matrix_json(freeness->residue_matrix);
    v["determinant"] = ff_to_string(freeness->det);
    v["free"] = freeness->free_generator;
    j["verification"] = v;
  }
  if (assoc) {
    ojson a;
    a["index_over_group_ring"] = assoc->index_over_group_ring;
    a["oracle_matches"] = assoc->oracle_matches;
    a["epsilon_generates"] = assoc->epsilon_generates;
    a["wild_trace_contained"] = assoc->wild_trace_contained;
    j["associated_order"] = a;
  }
  j["verdict"] = verdict;
  return j;
}

}  // namespace weakram
