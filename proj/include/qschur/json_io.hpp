#pragma once

#include <json.hpp>

#include "qschur/hooks.hpp"
#include "qschur/partition.hpp"
#include "qschur/schubert.hpp"
#include "qschur/symfunc.hpp"

namespace qschur {

using json = nlohmann::json;

inline json partition_json(const std::vector<int>& parts) {
  return json(parts);
}

inline json symfunc_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [mu, c] : f.terms())
    terms.push_back({{"index", mu.parts()}, {"coeff", rat_to_string(c)}});
  return {{"degree", f.degree()}, {"basis", "m"}, {"terms", terms}};
}

inline json q_expansion_json(const QExpansion& x) {
  json terms = json::array();
  for (const auto& [lam, c] : x.terms)
    terms.push_back({{"index", lam.parts()}, {"coeff", rat_to_string(c)}});
  return {{"degree", x.degree}, {"basis", "Q"}, {"terms", terms}};
}

inline json schur_expansion_json(const SchurExpansion& x) {
  json terms = json::array();
  for (const auto& [mu, c] : x.terms)
    terms.push_back({{"index", mu.parts()}, {"coeff", rat_to_string(c)}});
  return {{"degree", x.degree}, {"basis", "s"}, {"terms", terms}};
}

inline json schubert_lg_json(const SchubertExpansionLG& x) {
  json terms = json::array();
  long degree = x.terms.empty() ? 0 : x.terms.begin()->first.weight();
  for (const auto& [lam, c] : x.terms)
    terms.push_back({{"index", lam.parts()}, {"coeff", c.str()}});
  return {{"degree", degree}, {"basis", "sigma'"}, {"n", x.n}, {"terms", terms}};
}

inline json schubert_g_json(const SchubertExpansionG& x) {
  json terms = json::array();
  long degree = x.terms.empty() ? 0 : x.terms.begin()->first.weight();
  for (const auto& [mu, c] : x.terms)
    terms.push_back({{"index", mu.parts()}, {"coeff", c.str()}});
  return {{"degree", degree}, {"basis", "sigma"}, {"n", x.n}, {"terms", terms}};
}

inline json hook_data_json(const HookData& h) {
  json cells = json::array();
  for (const auto& [cell, hook] : h.hooks)
    cells.push_back(
        {{"row", cell.first}, {"col", cell.second}, {"hook", hook}});
  return {{"shape", h.shape},
          {"shifted", h.shifted},
          {"hooks", cells},
          {"bar", rat_to_string(h.bar)},
          {"degree", h.degree.str()}};
}

inline std::string schubert_lg_to_string(const SchubertExpansionLG& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [lam, c] : x.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str() + "*";
    out += "sigma'[" + lam.to_string() + "]";
  }
  return out;
}

inline std::string schubert_g_to_string(const SchubertExpansionG& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : x.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str() + "*";
    out += "sigma[" + mu.to_string() + "]";
  }
  return out;
}

}  // namespace qschur
