#pragma once

#include <string>

#include <json.hpp>

#include "fusionflag/garland.hpp"

namespace fusionflag {

using Json = nlohmann::ordered_json;

inline Json json_rat(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(q.get_str());
}

inline Json json_weight(const Weight& w) {
  Json arr = Json::array();
  for (int i = 0; i < w.rank(); ++i) arr.push_back(json_rat(w[i]));
  return arr;
}

inline std::string csv_weight(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) s += (i ? " " : "") + w[i].get_str();
  return s;
}

inline Json json_qcharacter(const QCharacter& q) {
  Json rows = Json::array();
  for (const auto& [key, mult] : q.table) {
    Json row;
    row["weight"] = json_weight(key.first);
    row["degree"] = key.second;
    row["mult"] = mult;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string csv_qcharacter(const QCharacter& q) {
  std::string out = "weight,degree,mult\n";
  for (const auto& [key, mult] : q.table)
    out += csv_weight(key.first) + "," + std::to_string(key.second) + "," + std::to_string(mult) + "\n";
  return out;
}

inline Json json_module(const ModuleRep& m) {
  Json j;
  j["name"] = m.name;
  j["dim"] = m.dim;
  j["highest"] = m.highest;
  Json ws = Json::array(), ps = Json::array();
  for (const Weight& w : m.weights) ws.push_back(json_weight(w));
  for (uint8_t p : m.parities) ps.push_back(static_cast<int>(p));
  j["weights"] = std::move(ws);
  j["parities"] = std::move(ps);
  return j;
}

inline Json json_flag_table(const std::vector<FlagPiece>& pieces, int n) {
  Json rows = Json::array();
  for (const FlagPiece& p : pieces) {
    Json row;
    row["indices"] = p.indices;
    row["partition_image"] = p.image;
    row["degree_shift"] = p.degree_shift;
    Int prod = 1;
    for (long mj : p.image) prod *= even_dimension(n, mj);
    row["even_dims_product"] = prod.get_str();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string csv_flag_table(const std::vector<FlagPiece>& pieces, int n) {
  std::string out = "indices,partition_image,degree_shift,even_dims_product\n";
  for (const FlagPiece& p : pieces) {
    std::string idx, img;
    for (size_t i = 0; i < p.indices.size(); ++i) idx += (i ? " " : "") + std::to_string(p.indices[i]);
    for (size_t i = 0; i < p.image.size(); ++i) img += (i ? " " : "") + std::to_string(p.image[i]);
    Int prod = 1;
    for (long mj : p.image) prod *= even_dimension(n, mj);
    out += idx + "," + img + "," + std::to_string(p.degree_shift) + "," + prod.get_str() + "\n";
  }
  return out;
}

inline Json json_relation_report(const RelationCheckReport& rep) {
  Json rows = Json::array();
  for (const RelationCheckRow& r : rep.rows) {
    Json row;
    row["family"] = rep.family;
    row["params"] = rep.params;
    row["generator"] = r.descriptor;
    row["degree"] = r.degree;
    row["residual_norm"] = r.zero ? "zero" : "nonzero";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string csv_poset_report(const PosetScanReport& rep) {
  std::string out = "lam,mu,preceq,dim_lam,dim_mu,equivalent,ok\n";
  for (const PosetScanRow& r : rep.rows) {
    out += weight_tuple_str(r.a) + "," + weight_tuple_str(r.b) + ",1," + r.dim_a.get_str() + "," + r.dim_b.get_str() + "," +
           (r.equivalent_ab ? "1" : "0") + "," + (r.ok ? "1" : "0") + "\n";
  }
  return out;
}

inline Json json_poset_report(const PosetScanReport& rep) {
  Json j;
  j["tuples"] = rep.tuples;
  Json rows = Json::array();
  for (const PosetScanRow& r : rep.rows) {
    Json row;
    row["lam"] = weight_tuple_str(r.a);
    row["mu"] = weight_tuple_str(r.b);
    row["dim_lam"] = r.dim_a.get_str();
    row["dim_mu"] = r.dim_b.get_str();
    row["equivalent"] = r.equivalent_ab;
    row["ok"] = r.ok;
    rows.push_back(std::move(row));
  }
  j["pairs"] = std::move(rows);
  j["violations"] = rep.violations;
  return j;
}

inline Json json_half_integer(const HalfIntegerReport& rep) {
  Json rows = Json::array();
  for (const HalfIntegerRow& r : rep.rows) {
    Json row;
    row["alpha"] = r.alpha.str();
    row["value"] = json_rat(r.value);
    row["ok"] = r.ok;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fusionflag
