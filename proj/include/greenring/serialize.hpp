#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encoding of labels, ring elements, and block representations.
 *
 * Label objects use a "kind" discriminator:
 *   {"kind":"simple","u":0,"i":1}
 *   {"kind":"syzygy","m":2,"u":0,"i":1}
 *   {"kind":"string+","ell":2,"u":0,"i":1}   (and "string-")
 *   {"kind":"band","ell":2,"lambda":"3/2","u":0,"i":1}
 *   {"kind":"projective","u":0,"i":2}
 *
 * Band parameters serialize as exact rational strings.  label_from_json also
 * accepts integral lambda values and "syzygy" objects with m omitted or 0.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "greenring/blockrep.hpp"
#include "greenring/fusion.hpp"
#include "greenring/labels.hpp"
#include "greenring/parse.hpp"

namespace greenring {

using nlohmann::json;

inline json label_to_json(const ModLabel& l) {
  json j;
  switch (l.kind) {
    case Kind::syzygy:
      if (l.m == 0) {
        j["kind"] = "simple";
      } else {
        j["kind"] = "syzygy";
        j["m"] = l.m;
      }
      break;
    case Kind::string_plus:
      j["kind"] = "string+";
      j["ell"] = l.ell;
      break;
    case Kind::string_minus:
      j["kind"] = "string-";
      j["ell"] = l.ell;
      break;
    case Kind::band:
      j["kind"] = "band";
      j["ell"] = l.ell;
      j["lambda"] = l.lambda.str();
      break;
    case Kind::projective:
      j["kind"] = "projective";
      break;
  }
  j["u"] = l.v.u;
  j["i"] = l.v.i;
  return j;
}

inline ModLabel label_from_json(const Params& p, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int64_t u = j.at("u").get<int64_t>();
  const int64_t i = j.at("i").get<int64_t>();
  if (kind == "simple") return simple_label(p, u, i);
  if (kind == "syzygy") return syzygy_label(p, j.value("m", int64_t{0}), u, i);
  if (kind == "string+") return string_label(p, '+', j.at("ell").get<int64_t>(), u, i);
  if (kind == "string-") return string_label(p, '-', j.at("ell").get<int64_t>(), u, i);
  if (kind == "band") {
    const json& lj = j.at("lambda");
    Rational lam = lj.is_string() ? rational_from_text(lj.get<std::string>())
                                  : Rational(lj.get<int64_t>());
    return band_label(p, j.at("ell").get<int64_t>(), lam, u, i);
  }
  if (kind == "projective") return projective_label(p, u, i);
  throw std::invalid_argument("unknown label kind: " + kind);
}

inline json element_to_json(const Params& p, const GreenElement& e) {
  json core = json::array();
  for (const auto& [l, mult] : e.core)
    core.push_back({{"label", label_to_json(l)}, {"text", to_text(l)}, {"mult", mult}});
  return {{"core", core}, {"proj_dim", e.proj_dim}, {"total_dim", total_dim_of(p, e)}};
}

inline GreenElement element_from_json(const Params& p, const json& j) {
  GreenElement e;
  e.proj_dim = j.at("proj_dim").get<int64_t>();
  for (const json& entry : j.at("core"))
    add_label(e, label_from_json(p, entry.at("label")), entry.at("mult").get<int64_t>());
  return e;
}

namespace rep {

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int64_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int64_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json rep_to_json(const BlockRep& rep) {
  json b = json::array();
  json bbar = json::array();
  for (int64_t q = 0; q < rep.m; ++q) {
    b.push_back(matrix_to_json(rep.b[static_cast<size_t>(q)]));
    bbar.push_back(matrix_to_json(rep.bbar[static_cast<size_t>(q)]));
  }
  return {{"m", rep.m}, {"dims", rep.dims}, {"b", std::move(b)}, {"bbar", std::move(bbar)}};
}

}  // namespace rep

}  // namespace greenring
